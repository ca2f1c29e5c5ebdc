"""Deterministic SVG drawings of embedded hexagons and their foliations.

Every curve is a geodesic or hypercycle arc, hence a Euclidean circle (or
straight segment); each is emitted as an exact SVG arc through three known
points. Coordinates are printed with six decimals and elements appear in a
fixed order, so identical input gives byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .deform import deform
from .errors import DomainError
from .hexagon import EmbeddedHexagon, HexagonShape, HexType, embed
from .hyperbolic import DiscPoint


@dataclass(frozen=True)
class RenderSpec:
    width_px: int = 512
    foliation_F: bool = True
    foliation_G: bool = True
    tripod: bool = True
    central_region: bool = True
    labels: bool = False
    leaf_counts: tuple[int, int] = (5, 5)
    overlay_K: float | None = None

    def __post_init__(self):
        if self.width_px < 64:
            raise DomainError("width_px must be at least 64")
        if min(self.leaf_counts) < 0:
            raise DomainError("leaf counts must be non-negative")


def _num(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    def __init__(self, width: int):
        self.w = width

    def px(self, p: DiscPoint) -> tuple[float, float]:
        return (p.x + 1.0) * 0.5 * self.w, (1.0 - p.y) * 0.5 * self.w

    def arc_cmd(self, P, M, Q) -> str:
        """Path command continuing from ``P`` to ``Q`` along the circle through ``P, M, Q``."""
        (x0, y0), (xm, ym), (x1, y1) = P, M, Q
        ax, ay, bx, by = xm - x0, ym - y0, x1 - x0, y1 - y0
        cross = ax * by - ay * bx
        scale = max(1.0, ax * ax + ay * ay, bx * bx + by * by)
        if abs(cross) <= 1e-9 * scale:
            return f"L {_num(x1)} {_num(y1)}"
        a2, b2 = ax * ax + ay * ay, bx * bx + by * by
        cx = x0 + (by * a2 - ay * b2) / (2 * cross)
        cy = y0 + (ax * b2 - bx * a2) / (2 * cross)
        r = math.hypot(x0 - cx, y0 - cy)
        if r > 1e7:
            return f"L {_num(x1)} {_num(y1)}"
        t0 = math.atan2(y0 - cy, x0 - cx)
        tm = (math.atan2(ym - cy, xm - cx) - t0) % (2 * math.pi)
        t1 = (math.atan2(y1 - cy, x1 - cx) - t0) % (2 * math.pi)
        sweep = 1 if tm < t1 else 0
        span = t1 if sweep else 2 * math.pi - t1
        large = 1 if span > math.pi else 0
        return f"A {_num(r)} {_num(r)} 0 {large} {sweep} {_num(x1)} {_num(y1)}"

    def curve(self, pts) -> str:
        """Path through ``pts = (P, M, Q, M2, Q2, ...)`` as consecutive arcs."""
        px = [self.px(p) for p in pts]
        parts = [f"M {_num(px[0][0])} {_num(px[0][1])}"]
        for n in range(1, len(px), 2):
            parts.append(self.arc_cmd(px[n - 1], px[n], px[n + 1]))
        return " ".join(parts)


def _fp(e: EmbeddedHexagon, i: int, a: float, delta: float) -> DiscPoint:
    return DiscPoint.from_hyperboloid(e.fermi(i, a, delta))


def _sides(e: EmbeddedHexagon):
    """Six boundary arcs in counterclockwise order: long edge i, then the following short edge."""
    out = []
    for i in range(3):
        ell = e.shape.half_longs[i]
        out.append(("side", (_fp(e, i, -ell, 0.0), _fp(e, i, 0.0, 0.0), _fp(e, i, ell, 0.0))))
        j = (i + 2) % 3
        p, q = e.short_edge_endpoints(j)
        mid = DiscPoint.from_hyperboloid(_midpoint(p, q))
        out.append(("side", (p, mid, q)))
    return out


def _midpoint(p: DiscPoint, q: DiscPoint):
    X, Y = p.to_hyperboloid(), q.to_hyperboloid()
    S = tuple(a + b for a, b in zip(X, Y))
    n = math.sqrt(S[0] ** 2 - S[1] ** 2 - S[2] ** 2)
    return tuple(x / n for x in S)


def render(shape: HexagonShape, spec: RenderSpec = RenderSpec()) -> str:
    e = embed(shape)
    cv = _Canvas(spec.width_px)
    W = spec.width_px
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{W}" viewBox="0 0 {W} {W}">',
        "<style>.boundary{fill:none;stroke:#888;stroke-width:1}"
        ".side{fill:none;stroke:#000;stroke-width:2}"
        ".tripod{stroke:#c00;stroke-width:1.5}"
        ".central{fill:#9cf;fill-opacity:0.4;stroke:none}"
        ".central-outside{fill:#f96;fill-opacity:0.4;stroke:#f60;stroke-dasharray:4 2}"
        ".leaf-F{fill:none;stroke:#06c;stroke-width:0.75}"
        ".leaf-G{fill:none;stroke:#090;stroke-width:0.75}"
        ".overlay{fill:none;stroke:#a0a;stroke-width:1.5;stroke-dasharray:6 3}"
        ".label{font:12px sans-serif}</style>",
        f'<circle class="boundary" cx="{_num(W / 2)}" cy="{_num(W / 2)}" r="{_num(W / 2)}"/>',
    ]
    sh = e.shape
    if spec.central_region:
        pts = []
        for i in range(3):
            ell, L = sh.half_longs[i], sh.Ls[i]
            seg = [_fp(e, i, -ell, L), _fp(e, i, 0.0, L), _fp(e, i, ell, L)]
            pts.extend(seg if not pts else seg[1:])
        cls = "central-outside" if sh.hex_type is HexType.III else "central"
        lines.append(f'<path class="{cls}" d="{cv.curve(pts)} Z"/>')
    for cls, pts in _sides(e):
        lines.append(f'<path class="{cls}" d="{cv.curve(pts)}"/>')
    if spec.foliation_F:
        n = spec.leaf_counts[0]
        for i in range(3):
            if not e.chartable(i):
                continue
            for m in range(1, n + 1):
                u = 2.0 * m / (n + 1)
                if u <= 1.0:
                    a, delta = sh.half_longs[i], u * sh.Ls[i]
                else:
                    a, delta = e.central_leaf(i, u)
                pts = (_fp(e, i, -a, delta), _fp(e, i, 0.0, delta), _fp(e, i, a, delta))
                lines.append(f'<path class="leaf-F" d="{cv.curve(pts)}"/>')
    if spec.foliation_G:
        n = spec.leaf_counts[1]
        for i in range(3):
            if not e.chartable(i):
                continue
            for m in range(1, n + 1):
                a = (2.0 * m / (n + 1) - 1.0) * sh.half_longs[i]
                L = sh.Ls[i]
                pts = (_fp(e, i, a, 0.0), _fp(e, i, a, 0.5 * L), _fp(e, i, a, L))
                lines.append(f'<path class="leaf-G" d="{cv.curve(pts)}"/>')
    if spec.tripod:
        o = cv.px(DiscPoint(0.0, 0.0))
        for foot in e.feet:
            x, y = cv.px(foot)
            lines.append(f'<line class="tripod" x1="{_num(o[0])}" y1="{_num(o[1])}" '
                         f'x2="{_num(x)}" y2="{_num(y)}"/>')
    if spec.overlay_K is not None:
        ed = deform(shape, spec.overlay_K).deformed_embedding
        for _, pts in _sides(ed):
            lines.append(f'<path class="overlay" d="{cv.curve(pts)}"/>')
    if spec.labels:
        for i in range(3):
            x, y = cv.px(_fp(e, i, 0.0, 0.0))
            lines.append(f'<text class="label" x="{_num(x)}" y="{_num(y)}">s{i + 1}</text>')
        x, y = cv.px(DiscPoint(0.0, 0.0))
        lines.append(f'<text class="label" x="{_num(x)}" y="{_num(y)}">O</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
