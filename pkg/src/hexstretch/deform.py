"""Forward/backward deformation of a hexagon and the chart-preserving map between them.

The deformed hexagon ``H_K`` keeps the tripod angles and multiplies
``cosh d`` by ``K``; every ``cosh ell_i`` is then multiplied by ``K`` too.
The map ``f_k : H -> H_K`` sends the point with foliation coordinates
``(i, u, v)`` in ``H`` to the point with the same coordinates in ``H_K``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .config import DEFAULT_TOL, Tolerances
from .errors import DomainError
from .hexagon import EmbeddedHexagon, FoliationCoord, HexagonShape, _build, embed
from .hyperbolic import DiscPoint, dist


def K_min(base: HexagonShape) -> float:
    """Infimum of admissible ``K``; at this value the shortest long edge becomes ideal."""
    return 1.0 / math.cosh(min(base.half_longs))


@dataclass(frozen=True)
class DeformationFamily:
    base: HexagonShape
    K: float
    deformed: HexagonShape
    ks: tuple[float, float, float]
    k: float
    argmax_edge: int  # 0-based long-edge index
    tol: Tolerances = DEFAULT_TOL

    # Embeddings are built on first use: the family itself is intrinsic and
    # stays valid for K far beyond what double precision can place in the disc.
    @cached_property
    def base_embedding(self) -> EmbeddedHexagon:
        return embed(self.base, self.tol)

    @cached_property
    def deformed_embedding(self) -> EmbeddedHexagon:
        return embed(self.deformed, self.tol)

    def to_json(self) -> dict:
        return {
            "K": self.K,
            "k": self.k,
            "k_i": list(self.ks),
            "argmax_edge": self.argmax_edge,
            "base": self.base.to_json(),
            "deformed": self.deformed.to_json(),
        }


def deform(base: HexagonShape, K: float, tol: Tolerances = DEFAULT_TOL) -> DeformationFamily:
    K = float(K)
    kmin = K_min(base)
    if not K > kmin or not math.isfinite(K):
        raise DomainError(f"K={K!r} is not admissible; need K in ({kmin!r}, inf)")
    if K == 1.0:
        deformed = base
    else:
        deformed = _build(base.alphas, math.acosh(K * math.cosh(base.d)), tol)
    ks = tuple(deformed.half_longs[i] / base.half_longs[i] for i in range(3))
    j = max(range(3), key=lambda i: (ks[i], -i))
    return DeformationFamily(base, K, deformed, ks, ks[j], j, tol)


def compose(fam: DeformationFamily, K2: float) -> DeformationFamily:
    """Deform ``fam.deformed`` by the relative factor that lands at total factor ``K2``."""
    return deform(fam.deformed, K2 / fam.K, fam.tol)


def map_point(fam: DeformationFamily, p: DiscPoint) -> DiscPoint:
    c = fam.base_embedding.point_to_coord(p)
    return fam.deformed_embedding.coord_to_point(c)


def map_coord(fam: DeformationFamily, c: FoliationCoord) -> DiscPoint:
    return fam.deformed_embedding.coord_to_point(c)


def leaf_stretch(fam: DeformationFamily, sector: int, u: float) -> float:
    """Stretch factor of ``f_k`` along the hypercycle leaf ``F_i(u)``, ``u`` in ``[0, 1]``.

    The leaf has length ``2 ell_i cosh(u L_i)`` in ``H`` and
    ``2 ell_i^K cosh(u L_i^K)`` in ``H_K``; the map is affine in arc length.
    """
    i = sector - 1
    L, LK = fam.base.Ls[i], fam.deformed.Ls[i]
    if L < -fam.tol.type_ii:
        raise DomainError(f"sector {sector} has L = {L!r} < 0; its rectangle part is empty")
    if not 0.0 <= u <= 1.0:
        raise DomainError(f"u={u!r} must lie in [0, 1]")
    return fam.ks[i] * math.cosh(u * LK) / math.cosh(u * L)


def transverse_contraction(fam: DeformationFamily, sector: int) -> float:
    """Stretch factor along the geodesic leaves ``G_i`` of the rectangle part."""
    i = sector - 1
    L = fam.base.Ls[i]
    if not L > fam.tol.type_ii:
        raise DomainError(f"sector {sector} has L = {L!r}; transverse contraction needs L > 0")
    return fam.deformed.Ls[i] / L


def L_of_K(alpha: float, ell: float, K: float) -> float:
    """``|L|`` of the quadrilateral with angle ``alpha`` whose half long edge is ``K * ell``.

    This family scales the length ``ell`` itself, unlike :func:`deform`,
    which scales ``cosh ell``.
    """
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"alpha={alpha!r} must lie in (0, pi)")
    if not (ell > 0 and K > 0):
        raise DomainError("ell and K must be positive")
    x = K * ell
    ca = 0.0 if alpha == 0.5 * math.pi else math.cos(alpha)
    sa = math.sin(alpha)
    if x > 350.0:
        # cosh^2 overflows; tanh L ~ |cos a| / cosh x
        return math.atanh(abs(ca) * 2.0 * math.exp(-x))
    arg = ca * ca / (math.cosh(x) ** 2 - sa * sa)
    if arg >= 1.0:
        raise DomainError(f"tanh^2 L = {arg!r} >= 1 at K*ell = {x!r}")
    return math.atanh(math.sqrt(arg))


# ---------------------------------------------------------------- verification

def _sigma_max(J) -> float:
    (a, b), (c, d) = J
    t = a * a + b * b + c * c + d * d
    det = a * d - b * c
    disc = max(0.0, t * t - 4.0 * det * det)
    return math.sqrt(0.5 * (t + math.sqrt(disc)))


def differential_norm(fam: DeformationFamily, p: DiscPoint, step: float | None = None) -> float:
    """Largest singular value of ``d f_k`` at ``p`` by central differences in orthonormal frames."""
    h = fam.tol.fd_step if step is None else step
    fp = map_point(fam, p)
    sp = h * 0.5 * (1.0 - p.norm2)
    sf = 2.0 / (1.0 - fp.norm2)
    cols = []
    for dx, dy in ((sp, 0.0), (0.0, sp)):
        fa = map_point(fam, DiscPoint(p.x + dx, p.y + dy))
        fb = map_point(fam, DiscPoint(p.x - dx, p.y - dy))
        cols.append(((fa.x - fb.x) * sf / (2 * h), (fa.y - fb.y) * sf / (2 * h)))
    return _sigma_max(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])))


def measured_leaf_stretch(fam: DeformationFamily, sector: int, u: float, v: float,
                          dv: float = 1e-6) -> float:
    """Distance ratio of ``f_k`` between two nearby points on the leaf ``F_i(u)``."""
    e = fam.base_embedding
    p = e.coord_to_point(FoliationCoord(sector, u, max(0.0, v - dv)))
    q = e.coord_to_point(FoliationCoord(sector, u, min(2.0, v + dv)))
    return dist(map_point(fam, p), map_point(fam, q)) / dist(p, q)


def measured_transverse_stretch(fam: DeformationFamily, sector: int, u: float, v: float,
                                du: float = 1e-6) -> float:
    """Distance ratio of ``f_k`` between two nearby points on the leaf ``G_i(v)`` (``u <= 1``)."""
    e = fam.base_embedding
    p = e.coord_to_point(FoliationCoord(sector, max(0.0, u - du), v))
    q = e.coord_to_point(FoliationCoord(sector, min(1.0, u + du), v))
    return dist(map_point(fam, p), map_point(fam, q)) / dist(p, q)


def edge_stretch(fam: DeformationFamily, edge: int, n: int = 64) -> float:
    """Largest distance ratio between consecutive sample points of long edge ``edge`` (0-based)."""
    e = fam.base_embedding
    ell = fam.base.half_longs[edge]
    best = 0.0
    for m in range(n):
        a0, a1 = -ell + 2 * ell * m / n, -ell + 2 * ell * (m + 1) / n
        p, q = (DiscPoint.from_hyperboloid(e.fermi(edge, a, 0.0)) for a in (a0, a1))
        fp, fq = map_point(fam, p), map_point(fam, q)
        best = max(best, dist(fp, fq) / dist(p, q))
    return best


@dataclass(frozen=True)
class StretchReport:
    k: float
    ks: tuple[float, float, float]
    grid_n: int
    grid_max: float
    grid_argmax: FoliationCoord
    region_max: dict
    per_leaf_max: dict
    edge_index: int
    edge_max: float
    bound: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "k_i": list(self.ks),
            "grid_n": self.grid_n,
            "grid_max": self.grid_max,
            "grid_argmax": {"sector": self.grid_argmax.sector, "u": self.grid_argmax.u,
                            "v": self.grid_argmax.v},
            "region_max": dict(self.region_max),
            "per_leaf_max": {str(s): rows for s, rows in self.per_leaf_max.items()},
            "edge_index": self.edge_index,
            "edge_max": self.edge_max,
            "bound": self.bound,
            "pass": self.passed,
        }


def verify_lipschitz(fam: DeformationFamily, grid_n: int = 64) -> StretchReport:
    """Finite-difference check that ``f_k`` is ``k``-Lipschitz and that ``k`` is attained.

    Samples a cell-centered ``grid_n x grid_n`` grid in ``(u, v)`` on every
    chartable sector. Ties in the maximum go to the first grid point in
    (sector, u, v) order.
    """
    if grid_n < 16:
        raise DomainError("grid_n must be at least 16")
    e = fam.base_embedding
    tol = fam.tol.fd
    best, best_at = -1.0, None
    region = {"rectangle": 0.0, "central": 0.0}
    per_leaf = {}
    for i in range(3):
        if not e.chartable(i):
            continue
        rows = []
        for ju in range(grid_n):
            u = 2.0 * (ju + 0.5) / grid_n
            row_max = 0.0
            for jv in range(grid_n):
                v = 2.0 * (jv + 0.5) / grid_n
                c = FoliationCoord(i + 1, u, v)
                s = differential_norm(fam, e.coord_to_point(c))
                row_max = max(row_max, s)
                if s > best:
                    best, best_at = s, c
            rows.append([u, row_max])
            key = "rectangle" if u <= 1.0 else "central"
            region[key] = max(region[key], row_max)
        per_leaf[i + 1] = rows
    j = fam.argmax_edge
    edge_max = edge_stretch(fam, j)
    bound = fam.k * (1.0 + tol)
    passed = best <= bound and edge_max >= fam.k * (1.0 - tol)
    return StretchReport(fam.k, fam.ks, grid_n, best, best_at, region, per_leaf, j, edge_max, bound,
                         passed)
