"""Command-line front end.

Exit codes: 0 success, 1 malformed or schema-violating input, 2 domain or
convergence error, 3 a verification that ran but failed. On errors a JSON
object ``{"error": {...}}`` goes to stdout and a one-line message to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys

from . import jsonio
from .config import Tolerances
from .deform import deform, map_point, verify_lipschitz
from .errors import HexError
from .hexagon import (FoliationCoord, HexagonShape, classify_short, embed, hexagon_identity_residuals)
from .hyperbolic import DiscPoint
from .quad import quad_residuals
from .render import RenderSpec, render
from .surface import (TriangulatedSurface, arc_certificate, boundary_cycles, cycle_sum, deform_surface,
                      luo_radius, surface_k, validate)

EXIT_SCHEMA, EXIT_DOMAIN, EXIT_VERIFY = 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code, self.kind = code, kind


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_SCHEMA, "io", str(exc)) from exc


def _tol(args) -> Tolerances:
    kw = {f.name: getattr(args, f"tol_{f.name}") for f in dataclasses.fields(Tolerances)
          if getattr(args, f"tol_{f.name}", None) is not None}
    return Tolerances(**kw)


def _hexagon(args) -> HexagonShape:
    return HexagonShape.from_json(jsonio.load(_read(args.infile), jsonio.HEXAGON_SCHEMA), _tol(args))


def _surface(args) -> TriangulatedSurface:
    return TriangulatedSurface.from_json(jsonio.load(_read(args.infile), jsonio.SURFACE_SCHEMA), _tol(args))


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != n or not all(math.isfinite(v) for v in vals):
        raise _Fail(EXIT_SCHEMA, "argument", f"{what} needs {n} comma-separated numbers, got {text!r}")
    return vals


def _coord(text: str) -> FoliationCoord:
    i, u, v = _floats(text, 3, "--coord")
    if i != int(i):
        raise _Fail(EXIT_SCHEMA, "argument", f"sector must be an integer, got {i!r}")
    return FoliationCoord(int(i), u, v)


def _coord_json(c: FoliationCoord) -> dict:
    return {"sector": c.sector, "u": c.u, "v": c.v}


# ---------------------------------------------------------------- commands

def cmd_hexagon_solve(args):
    sh = _hexagon(args)
    out = sh.to_json()
    out["residuals"] = {
        "angle_sum": abs(math.fsum(sh.alphas) - math.pi),
        "hexagon_identity": list(hexagon_identity_residuals(sh)),
        "quad": [list(quad_residuals(q)) for q in sh.quads],
    }
    return out, 0


def cmd_hexagon_classify(args):
    text = _read(args.infile)
    try:
        obj = jsonio.load(text, jsonio.LAMBDA_SCHEMA)
        return {"type": classify_short(obj["lambda"]).value, "lambda": obj["lambda"]}, 0
    except jsonio.SchemaError:
        sh = HexagonShape.from_json(jsonio.load(text, jsonio.HEXAGON_SCHEMA), _tol(args))
        return {"type": sh.hex_type.value, "lambda": list(sh.lambdas),
                "type_from_lambda": classify_short(sh.lambdas).value}, 0


def cmd_hexagon_coords(args):
    e = embed(_hexagon(args), _tol(args))
    if args.coord is not None:
        c = _coord(args.coord)
        p = e.coord_to_point(c)
        return {"coord": _coord_json(c), "point": [p.x, p.y]}, 0
    if args.point is not None:
        x, y = _floats(args.point, 2, "--point")
        c = e.point_to_coord(DiscPoint(x, y))
        return {"point": [x, y], "coord": _coord_json(c)}, 0
    return {
        "feet": [[p.x, p.y] for p in e.feet],
        "corners": [[p.x, p.y] for p in e.corners],
        "central_corner_radius": e.central_corner_radius,
    }, 0


def cmd_deform(args):
    fam = deform(_hexagon(args), args.K, _tol(args))
    return fam.to_json(), 0


def cmd_map_point(args):
    fam = deform(_hexagon(args), args.K, _tol(args))
    if args.coord is not None:
        c = _coord(args.coord)
        p = fam.base_embedding.coord_to_point(c)
    elif args.point is not None:
        x, y = _floats(args.point, 2, "--point")
        p = DiscPoint(x, y)
        c = fam.base_embedding.point_to_coord(p)
    else:
        raise _Fail(EXIT_SCHEMA, "argument", "map-point needs --point or --coord")
    q = map_point(fam, p)
    return {"K": fam.K, "point": [p.x, p.y], "coord": _coord_json(c), "image": [q.x, q.y]}, 0


def cmd_verify_lipschitz(args):
    fam = deform(_hexagon(args), args.K, _tol(args))
    rep = verify_lipschitz(fam, args.grid)
    return rep.to_json(), (0 if rep.passed else EXIT_VERIFY)


def cmd_surface_validate(args):
    s = _surface(args)
    v = validate(s)
    return {"valid": not v, "violations": [x.to_json() for x in v]}, (0 if not v else EXIT_VERIFY)


def cmd_surface_boundaries(args):
    s = _surface(args)
    return {"cycles": [c.to_json() for c in boundary_cycles(s)]}, 0


def cmd_surface_deform(args):
    s = _surface(args)
    d = deform_surface(s, args.K)
    k, per_edge = surface_k(s, args.K)
    before = boundary_cycles(s)
    after = boundary_cycles(d)
    return {
        "K": args.K,
        "k": k,
        "k_e": [per_edge[n] for n in range(len(s.gluings))],
        "boundary_lengths": [c.length for c in before],
        "deformed_boundary_lengths": [c.length for c in after],
        "surface": d.to_json(),
    }, 0


def cmd_surface_certificate(args):
    cert = arc_certificate(_surface(args), args.K1, args.K2)
    return cert.to_json(), (0 if cert.geodesic_grade else EXIT_VERIFY)


def cmd_surface_luo(args):
    s = _surface(args)
    out = {"z": [luo_radius(s, n) for n in range(len(s.gluings))]}
    if args.cycle is not None:
        cyc = [int(x) for x in args.cycle.split(",") if x.strip()]
        out["cycle"] = cyc
        out["cycle_sum"] = cycle_sum(s, cyc)
    out["boundaries"] = [
        {"crossed": list(c.crossed), "cycle_sum": cycle_sum(s, c.crossed), "length": c.length}
        for c in boundary_cycles(s) if c.closed
    ]
    return out, 0


def cmd_render(args):
    spec = RenderSpec(
        width_px=args.width,
        foliation_F=not args.no_F,
        foliation_G=not args.no_G,
        tripod=not args.no_tripod,
        central_region=not args.no_central,
        labels=args.labels,
        leaf_counts=(args.leaves_F, args.leaves_G),
        overlay_K=args.K,
    )
    return render(_hexagon(args), spec), 0


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's default 2."""

    def error(self, message):
        raise _Fail(EXIT_SCHEMA, "usage", f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--in", dest="infile", help="input JSON file (default: stdin)")
    p.add_argument("--out", dest="outfile", help="output file (default: stdout)")
    for f in dataclasses.fields(Tolerances):
        p.add_argument(f"--tol-{f.name.replace('_', '-')}", dest=f"tol_{f.name}", type=float,
                       help=f"override tolerance (default {f.default:g})")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="hexstretch", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    hx = sub.add_parser("hexagon", help="solve, classify or chart a hexagon")
    hsub = hx.add_subparsers(dest="sub", required=True)
    hsub.add_parser("solve", parents=[common]).set_defaults(func=cmd_hexagon_solve)
    hsub.add_parser("classify", parents=[common]).set_defaults(func=cmd_hexagon_classify)
    c = hsub.add_parser("coords", parents=[common])
    c.add_argument("--coord", help="sector,u,v")
    c.add_argument("--point", help="x,y")
    c.set_defaults(func=cmd_hexagon_coords)

    d = sub.add_parser("deform", parents=[common])
    d.add_argument("--K", type=float, required=True)
    d.set_defaults(func=cmd_deform)

    m = sub.add_parser("map-point", parents=[common])
    m.add_argument("--K", type=float, required=True)
    m.add_argument("--coord", help="sector,u,v")
    m.add_argument("--point", help="x,y")
    m.set_defaults(func=cmd_map_point)

    v = sub.add_parser("verify")
    vsub = v.add_subparsers(dest="sub", required=True)
    vl = vsub.add_parser("lipschitz", parents=[common])
    vl.add_argument("--K", type=float, required=True)
    vl.add_argument("--grid", type=int, default=64)
    vl.set_defaults(func=cmd_verify_lipschitz)

    s = sub.add_parser("surface")
    ssub = s.add_subparsers(dest="sub", required=True)
    ssub.add_parser("validate", parents=[common]).set_defaults(func=cmd_surface_validate)
    ssub.add_parser("boundaries", parents=[common]).set_defaults(func=cmd_surface_boundaries)
    sd = ssub.add_parser("deform", parents=[common])
    sd.add_argument("--K", type=float, required=True)
    sd.set_defaults(func=cmd_surface_deform)
    sc = ssub.add_parser("certificate", parents=[common])
    sc.add_argument("--K1", type=float, required=True)
    sc.add_argument("--K2", type=float, required=True)
    sc.set_defaults(func=cmd_surface_certificate)
    sl = ssub.add_parser("luo", parents=[common])
    sl.add_argument("--cycle", help="comma-separated gluing indices")
    sl.set_defaults(func=cmd_surface_luo)

    r = sub.add_parser("render", parents=[common])
    r.add_argument("--K", type=float, help="overlay the hexagon deformed by K")
    r.add_argument("--width", type=int, default=512)
    r.add_argument("--leaves-F", type=int, default=5)
    r.add_argument("--leaves-G", type=int, default=5)
    r.add_argument("--no-F", action="store_true")
    r.add_argument("--no-G", action="store_true")
    r.add_argument("--no-tripod", action="store_true")
    r.add_argument("--no-central", action="store_true")
    r.add_argument("--labels", action="store_true")
    r.set_defaults(func=cmd_render)
    return ap


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(code: int, kind: str, message: str) -> int:
    sys.stdout.write(jsonio.dumps({"error": {"kind": kind, "exit_code": code, "message": message}}))
    sys.stderr.write(f"hexstretch: {message}\n")
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result, code = args.func(args)
    except _Fail as exc:
        return _error(exc.code, exc.kind, str(exc))
    except jsonio.SchemaError as exc:
        return _error(EXIT_SCHEMA, "schema", str(exc))
    except HexError as exc:
        return _error(EXIT_DOMAIN, type(exc).__name__, str(exc))
    _emit(result if isinstance(result, str) else jsonio.dumps(result), args.outfile)
    return code


if __name__ == "__main__":
    sys.exit(main())
