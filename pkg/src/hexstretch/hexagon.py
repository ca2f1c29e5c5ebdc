"""Right-angled hexagons built from a geodesic tripod.

A hexagon ``H`` has long edges ``s_1, s_2, s_3`` (lengths ``2 ell_i``)
alternating with short edges (lengths ``lambda_i``; short edge ``i`` is
opposite long edge ``i``). The tripod is the union of three segments of
common length ``d`` from a center ``O`` to feet ``A_i`` on the short-edge
lines, meeting the lines perpendicularly. ``2 alpha_i`` is the angle at
``O`` between ``OA_j`` and ``OA_k``; the sector ``P_i`` between those two
rays is the union of two mirror-image trirectangular quadrilaterals
(see :mod:`hexstretch.quad`) and contains the long edge ``s_i``.

Indexing: tuples are 0-based everywhere (``alphas[0]`` is ``alpha_1``).
:class:`FoliationCoord` alone uses the 1-based sector label.

Canonical embedding: ``O`` at the origin and the sector midlines at angles
``phi = (0, alpha_1 + alpha_2, pi + alpha_2)``, so the ray ``OA_2`` sits at
``-alpha_1``, ``OA_3`` at ``+alpha_1`` and ``OA_1`` at ``alpha_1 + 2 alpha_2``.

Each sector carries a Fermi frame ``(e0, e1, e2)`` on the hyperboloid:
``e0`` is the midpoint of ``s_i``, ``e1`` the unit tangent of ``s_i``
(counterclockwise about ``O``) and ``e2`` its unit normal. A point at signed
arc ``a`` along ``s_i`` and signed distance ``delta`` from it is::

    X = cosh(delta) (cosh(a) e0 + sinh(a) e1) + sinh(delta) e2
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import quad as _quad
from .config import DEFAULT_TOL, Tolerances
from .errors import ConvergenceError, DegenerateError, DomainError, OutOfChart, OutsideHexagon
from .hyperbolic import DiscPoint, Geodesic, Vec3, minkowski, point_polar


class HexType(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class HexagonShape:
    alphas: tuple[float, float, float]
    d: float
    half_longs: tuple[float, float, float]
    Ls: tuple[float, float, float]
    lambdas: tuple[float, float, float]
    hs: tuple[float, float, float]
    hex_type: HexType

    @property
    def quads(self) -> tuple[_quad.QuadShape, ...]:
        return tuple(_sector_quad(a, self.d) for a in self.alphas)

    def to_json(self) -> dict:
        return {
            "half_long": list(self.half_longs),
            "alphas": list(self.alphas),
            "d": self.d,
            "type": self.hex_type.value,
            "L": list(self.Ls),
            "lambda": list(self.lambdas),
            "h": list(self.hs),
        }

    @classmethod
    def from_json(cls, obj: dict, tol: Tolerances = DEFAULT_TOL) -> HexagonShape:
        """Rebuild from either input form; ``alphas``/``d`` take precedence when both are present."""
        if "alphas" in obj and "d" in obj:
            return hexagon_from_alphas_d(obj["alphas"], obj["d"], tol=tol)
        if "half_long" in obj:
            return hexagon_from_half_longs(obj["half_long"], tol=tol)
        raise DomainError("hexagon JSON needs 'half_long' or both 'alphas' and 'd'")


# ---------------------------------------------------------------- construction

def _sector_quad(alpha: float, d: float) -> _quad.QuadShape:
    if alpha == 0.5 * math.pi:
        return _quad.quad_degenerate(d)
    return _quad.quad_from_alpha_d(alpha, d)


def classify_short(lambdas, rel_tol: float = 1e-12) -> HexType:
    """Type from the short-edge lengths alone (triangle inequalities)."""
    a, b, c = sorted(float(x) for x in lambdas)
    if a <= 0:
        raise DomainError("short-edge lengths must be positive")
    gap = a + b - c
    if abs(gap) <= rel_tol * c:
        return HexType.II
    return HexType.I if gap > 0 else HexType.III


def _classify_L(Ls, tol: float) -> HexType:
    m = min(Ls)
    if abs(m) <= tol:
        return HexType.II
    return HexType.I if m > 0 else HexType.III


def _build(alphas: tuple[float, float, float], d: float, tol: Tolerances) -> HexagonShape:
    """Assemble a shape from angles used verbatim (no renormalization)."""
    bad = [i + 1 for i, a in enumerate(alphas) if math.sin(a) * math.cosh(d) < 1.0 - _quad.IDEAL_TOL]
    if bad:
        raise DomainError(
            f"sin(alpha_i) cosh(d) < 1 for sector(s) {bad}; d={d!r} is too small for alphas={list(alphas)}")
    quads = [_sector_quad(a, d) for a in alphas]
    for i, q in enumerate(quads):
        if q.ideal:
            raise _quad.IdealLimit(f"long edge s_{i + 1} is ideal (ell = 0) at d={d!r}")
    ells = tuple(q.ell for q in quads)
    Ls = tuple(q.L for q in quads)
    hs = tuple(q.h for q in quads)
    lambdas = (Ls[1] + Ls[2], Ls[0] + Ls[2], Ls[0] + Ls[1])
    return HexagonShape(tuple(alphas), d, ells, Ls, lambdas, hs, _classify_L(Ls, tol.type_ii))


def hexagon_from_alphas_d(alphas, d: float, tol: Tolerances = DEFAULT_TOL) -> HexagonShape:
    alphas = tuple(float(a) for a in alphas)
    d = float(d)
    if len(alphas) != 3:
        raise DomainError("need exactly three angles")
    if not all(0.0 < a < math.pi for a in alphas):
        raise DomainError(f"every alpha must lie in (0, pi), got {list(alphas)}")
    total = math.fsum(alphas)
    if abs(total - math.pi) > 1e-9:
        raise DomainError(f"angles sum to {total!r}, not pi")
    if sum(a >= 0.5 * math.pi for a in alphas) > 1:
        raise DomainError("at most one alpha may be >= pi/2")
    if not d > 0 or not math.isfinite(d):
        raise DomainError(f"d={d!r} must be positive and finite")
    if abs(total - math.pi) > 4 * math.ulp(math.pi):
        # put the correction on the largest angle so that exact inputs like pi/2 survive
        j = max(range(3), key=lambda i: alphas[i])
        rest = math.fsum(alphas[i] for i in range(3) if i != j)
        alphas = tuple(math.pi - rest if i == j else alphas[i] for i in range(3))
    return _build(alphas, d, tol)


def realizable(ells) -> bool:
    """Whether a tripod with equal legs exists for these half-lengths.

    Equivalent to ``cosh ell_i`` satisfying the strict triangle inequalities.
    """
    c = sorted(math.cosh(x) for x in ells)
    return c[2] < c[0] + c[1]


def _angle_sum(cs, D: float, obtuse: int | None) -> float:
    total = 0.0
    for i, c in enumerate(cs):
        a = math.asin(min(1.0, c / D))
        total += (math.pi - a) if i == obtuse else a
    return total


def _angle_sum_prime(cs, d: float, obtuse: int | None) -> float:
    D = math.cosh(d)
    th = math.tanh(d)
    total = 0.0
    for i, c in enumerate(cs):
        x = c / D
        g = -x * th / math.sqrt(max(1e-300, 1.0 - x * x))
        total += -g if i == obtuse else g
    return total


def hexagon_from_half_longs(ells, tol: Tolerances = DEFAULT_TOL) -> HexagonShape:
    """Solve for the tripod ``(alphas, d)`` with prescribed long-edge half-lengths."""
    ells = tuple(float(x) for x in ells)
    if len(ells) != 3 or not all(0.0 < x < math.inf for x in ells):
        raise DomainError(f"half-lengths must be three positive finite numbers, got {list(ells)}")
    if not realizable(ells):
        c = [math.cosh(x) for x in ells]
        raise DomainError(
            f"no equal-leg tripod: cosh(ell) = {c} violates the triangle inequality")
    cs = tuple(math.cosh(x) for x in ells)
    d0 = max(ells)
    j = max(range(3), key=lambda i: ells[i])
    obtuse = None if _angle_sum(cs, math.cosh(d0 + 1e-12), None) >= math.pi else j

    # oriented so that g > 0 at d0 and g < 0 past the root on either branch
    sign = 1.0 if obtuse is None else -1.0

    def g(d):
        return sign * (_angle_sum(cs, math.cosh(d), obtuse) - math.pi)

    lo, hi = d0, d0 + 1.0
    for _ in range(200):
        if g(hi) < 0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise ConvergenceError("failed to bracket the tripod length", ells=ells, branch=obtuse, hi=hi)
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if g(mid) >= 0:
            lo = mid
        else:
            hi = mid
    d = 0.5 * (lo + hi)
    for _ in range(3):
        gp = sign * _angle_sum_prime(cs, d, obtuse)
        if gp == 0.0:
            break
        nd = d - g(d) / gp
        if not lo <= nd <= hi or abs(g(nd)) > abs(g(d)):
            break
        d = nd
    D = math.cosh(d)
    alphas = [math.asin(min(1.0, c / D)) for c in cs]
    if obtuse is not None:
        alphas[obtuse] = math.pi - alphas[obtuse]
    resid = abs(math.fsum(alphas) - math.pi)
    if resid > 1e-12:
        raise ConvergenceError("angle sum residual too large", ells=ells, d=d, residual=resid)
    return _build(tuple(alphas), d, tol)


def hexagon_identity_residuals(shape: HexagonShape) -> tuple[float, float, float]:
    """Residuals of ``cosh lam_k = sinh lam_i sinh lam_j cosh 2ell_k - cosh lam_i cosh lam_j``."""
    lam, ell = shape.lambdas, shape.half_longs
    out = []
    for k in range(3):
        i, j = (k + 1) % 3, (k + 2) % 3
        rhs = (math.sinh(lam[i]) * math.sinh(lam[j]) * math.cosh(2 * ell[k])
               - math.cosh(lam[i]) * math.cosh(lam[j]))
        out.append(abs(math.cosh(lam[k]) - rhs))
    return tuple(out)


# ---------------------------------------------------------------- embedding

def _add(*terms: tuple[float, Vec3]) -> Vec3:
    x0 = x1 = x2 = 0.0
    for c, v in terms:
        x0 += c * v[0]
        x1 += c * v[1]
        x2 += c * v[2]
    return (x0, x1, x2)


@dataclass(frozen=True)
class FoliationCoord:
    sector: int  # 1-based
    u: float
    v: float

    def __post_init__(self):
        if self.sector not in (1, 2, 3):
            raise OutOfChart(f"sector must be 1, 2 or 3, got {self.sector!r}")
        if not (0.0 <= self.u <= 2.0 and 0.0 <= self.v <= 2.0):
            raise OutOfChart(f"(u, v) = ({self.u!r}, {self.v!r}) outside [0, 2]^2")


@dataclass(frozen=True)
class EmbeddedHexagon:
    shape: HexagonShape
    tol: Tolerances = DEFAULT_TOL
    phis: tuple[float, float, float] = field(init=False)
    frames: tuple = field(init=False, repr=False)
    feet: tuple[DiscPoint, DiscPoint, DiscPoint] = field(init=False)
    corners: tuple[DiscPoint, ...] = field(init=False)
    long_edge_geodesics: tuple[Geodesic, ...] = field(init=False, repr=False)
    short_edge_geodesics: tuple[Geodesic, ...] = field(init=False, repr=False)
    _long_normals: tuple = field(init=False, repr=False)
    _short_normals: tuple = field(init=False, repr=False)

    def __post_init__(self):
        sh = self.shape
        if min(sh.half_longs) <= 0.0:
            raise DegenerateError("an ideal long edge cannot be embedded")
        a1, a2, _ = sh.alphas
        phis = (0.0, a1 + a2, math.pi + a2)
        frames = []
        for i in range(3):
            m = sh.Ls[i] + sh.hs[i]
            c, s = math.cos(phis[i]), math.sin(phis[i])
            cm, sm = math.cosh(m), math.sinh(m)
            frames.append(((cm, sm * c, sm * s), (0.0, -s, c), (-sm, -cm * c, -cm * s)))
        set_ = object.__setattr__
        set_(self, "phis", phis)
        set_(self, "frames", tuple(frames))
        # foot A_{i+1} on the clockwise ray of sector i
        feet = [None, None, None]
        for i in range(3):
            feet[(i + 1) % 3] = point_polar(phis[i] - sh.alphas[i], sh.d)
        set_(self, "feet", tuple(feet))

        corner_X = []
        for i in range(3):
            corner_X.append(self.fermi(i, -sh.half_longs[i], 0.0))
            corner_X.append(self.fermi(i, sh.half_longs[i], 0.0))
        set_(self, "corners", tuple(DiscPoint.from_hyperboloid(X) for X in corner_X))

        cen = _add(*[(1.0, X) for X in corner_X])
        norm = math.sqrt(-minkowski(cen, cen))
        cen = (cen[0] / norm, cen[1] / norm, cen[2] / norm)

        def oriented(n):
            return n if minkowski(cen, n) > 0 else (-n[0], -n[1], -n[2])

        long_n = tuple(oriented(frames[i][2]) for i in range(3))
        short_n = []
        for j in range(3):
            w = feet[j]
            r = math.hypot(w.x, w.y)
            ux, uy = w.x / r, w.y / r
            short_n.append(oriented((math.sinh(sh.d), math.cosh(sh.d) * ux, math.cosh(sh.d) * uy)))
        set_(self, "_long_normals", long_n)
        set_(self, "_short_normals", tuple(short_n))
        set_(self, "long_edge_geodesics", tuple(Geodesic.from_normal(n) for n in long_n))
        set_(self, "short_edge_geodesics", tuple(Geodesic.from_normal(n) for n in short_n))

    # -- frames

    @property
    def central_corner_radius(self) -> float:
        return math.tanh(0.5 * self.shape.d)

    def fermi(self, i: int, a: float, delta: float) -> Vec3:
        e0, e1, e2 = self.frames[i]
        cd = math.cosh(delta)
        return _add((cd * math.cosh(a), e0), (cd * math.sinh(a), e1), (math.sinh(delta), e2))

    def fermi_inverse(self, i: int, X: Vec3) -> tuple[float, float]:
        e0, e1, e2 = self.frames[i]
        delta = math.asinh(minkowski(X, e2))
        ratio = minkowski(X, e1) / -minkowski(X, e0)
        return math.atanh(max(-1.0, min(1.0, ratio))), delta

    def corner(self, i: int, end: bool) -> DiscPoint:
        """Start (``end=False``) or end corner of long edge ``i``."""
        return self.corners[2 * i + int(end)]

    def short_edge_endpoints(self, j: int) -> tuple[DiscPoint, DiscPoint]:
        return self.corner((j + 1) % 3, True), self.corner((j + 2) % 3, False)

    # -- containment

    def contains(self, p: DiscPoint, tol: float | None = None) -> bool:
        tol = self.tol.containment if tol is None else tol
        X = p.to_hyperboloid()
        for n in self._long_normals + self._short_normals:
            if math.asinh(minkowski(X, n)) < -tol:
                return False
        return True

    # -- chart

    def chartable(self, i: int) -> bool:
        return self.shape.Ls[i] > self.tol.type_ii

    def central_leaf(self, i: int, u: float) -> tuple[float, float]:
        """Half-width ``a*`` and distance from ``s_i`` of the central leaf ``u`` in ``[1, 2]``."""
        sh = self.shape
        L, ell = sh.Ls[i], sh.half_longs[i]
        t = (u - 1.0) * sh.d
        ct, st = math.cosh(t), math.sinh(t)
        delta = math.asinh(math.sinh(L) * ct)
        num = ct * math.cosh(L) * math.sinh(ell) - st * math.cosh(ell)
        den = ct * math.cosh(L) * math.cosh(ell) - st * math.sinh(ell)
        return math.atanh(max(0.0, num / den)), delta

    def _coord_X(self, i: int, u: float, v: float) -> Vec3:
        sh = self.shape
        if u <= 1.0:
            return self.fermi(i, (v - 1.0) * sh.half_longs[i], u * sh.Ls[i])
        a_star, delta = self.central_leaf(i, u)
        return self.fermi(i, (v - 1.0) * a_star, delta)

    def coord_to_point(self, c: FoliationCoord) -> DiscPoint:
        i = c.sector - 1
        if not self.chartable(i):
            raise OutOfChart(f"sector {c.sector} has L = {self.shape.Ls[i]!r}; it carries no chart")
        if c.u == 2.0:
            return DiscPoint(0.0, 0.0)
        p = DiscPoint.from_hyperboloid(self._coord_X(i, c.u, c.v))
        if not self.contains(p):
            raise OutOfChart(f"{c} names a point outside the hexagon")
        return p

    def _wedge(self, i: int, theta: float) -> bool:
        dphi = (theta - self.phis[i] + math.pi) % (2 * math.pi) - math.pi
        return abs(dphi) <= self.shape.alphas[i] + 1e-12

    def _chart_coords(self, i: int, X: Vec3) -> tuple[float, float]:
        sh = self.shape
        L, ell = sh.Ls[i], sh.half_longs[i]
        a, delta = self.fermi_inverse(i, X)
        # the central inverse is ill-conditioned at u = 1; keep the boundary leaf in the rectangle
        if delta <= L * (1.0 + 1e-12):
            return min(1.0, max(0.0, delta / L)), 1.0 + a / ell
        ratio = math.sinh(delta) / math.sinh(L)
        u = 1.0 + math.acosh(max(1.0, ratio)) / sh.d
        if u >= 2.0:
            return 2.0, 1.0
        a_star, _ = self.central_leaf(i, u)
        return u, (1.0 if a_star <= 0.0 else 1.0 + a / a_star)

    def point_to_coord(self, p: DiscPoint) -> FoliationCoord:
        if not self.contains(p):
            raise OutsideHexagon(f"{p} is outside the hexagon")
        if p.x == 0.0 and p.y == 0.0:
            return FoliationCoord(min(i for i in range(3) if self.chartable(i)) + 1, 2.0, 1.0)
        theta = math.atan2(p.y, p.x)
        order = [i for i in range(3) if self._wedge(i, theta) and self.chartable(i)]
        order += [i for i in range(3) if i not in order and self.chartable(i)]
        X = p.to_hyperboloid()
        slack = 1e-9
        for i in order:
            u, v = self._chart_coords(i, X)
            if -slack <= u <= 2.0 + slack and -slack <= v <= 2.0 + slack:
                return FoliationCoord(i + 1, min(2.0, max(0.0, u)), min(2.0, max(0.0, v)))
        raise OutOfChart(f"{p} lies in H but in no sector chart")


def embed(shape: HexagonShape, tol: Tolerances = DEFAULT_TOL) -> EmbeddedHexagon:
    return EmbeddedHexagon(shape, tol)


def coord_to_point(e: EmbeddedHexagon, c: FoliationCoord) -> DiscPoint:
    return e.coord_to_point(c)


def point_to_coord(e: EmbeddedHexagon, p: DiscPoint) -> FoliationCoord:
    return e.point_to_coord(p)
