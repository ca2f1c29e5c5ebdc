"""Rewrite the CLI golden outputs in tests/golden from tests/golden/cases.json.

Run after an intentional output change, then review the diff.
"""

import contextlib
import io
import json
import os
import sys
from pathlib import Path

from hexstretch.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def run_case(case):
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(GOLDEN / "inputs")
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(case["argv"])
    finally:
        os.chdir(cwd)
    return code, out.getvalue()


def main_regen():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case in cases:
        code, text = run_case(case)
        if code != case["exit"]:
            sys.exit(f"{case['name']}: exit {code}, expected {case['exit']}")
        path = GOLDEN / f"{case['name']}.{case.get('ext', 'json')}"
        path.write_text(text)
        print(f"wrote {path.name}")


if __name__ == "__main__":
    main_regen()
