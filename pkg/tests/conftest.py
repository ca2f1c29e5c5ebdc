import math

import pytest

from hexstretch.hexagon import hexagon_from_alphas_d, hexagon_from_half_longs
from hexstretch.surface import doubled

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def regular():
    return hexagon_from_half_longs((1.0, 1.0, 1.0))


@pytest.fixture(scope="session")
def scalene():
    return hexagon_from_half_longs((0.8, 1.0, 1.2))


@pytest.fixture(scope="session")
def type_iii():
    return hexagon_from_alphas_d((2 * math.pi / 3, math.pi / 6, math.pi / 6), 2.0)


@pytest.fixture(scope="session")
def type_ii():
    return hexagon_from_alphas_d((math.pi / 2, math.pi / 4, math.pi / 4), 1.5)


@pytest.fixture(scope="session")
def pants_regular(regular):
    return doubled(regular)


@pytest.fixture(scope="session")
def pants_scalene(scalene):
    return doubled(scalene)
