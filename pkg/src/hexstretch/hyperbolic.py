"""Poincare unit-disc primitives.

Closed forms are evaluated through the hyperboloid model (points ``X`` with
``<X, X> = -1`` for the Minkowski form ``-x0 y0 + x1 y1 + x2 y2``), which
turns distances, projections and signed distances into inner products.
The disc is only the storage and display format.

The numeric path-length routines at the bottom (:func:`adaptive_simpson`,
:func:`curve_length`, :func:`geodesic_arclength`,
:func:`hypercycle_arclength`) integrate ``ds = 2|dz| / (1 - |z|^2)`` directly
and serve as independent oracles for the closed forms; nothing on the main
computational path calls them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateError, DomainError

MAX_RADIUS = 1.0 - 1e-12

Vec3 = tuple[float, float, float]


# ---------------------------------------------------------------- hyperboloid

def minkowski(a: Vec3, b: Vec3) -> float:
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def lorentz_cross(a: Vec3, b: Vec3) -> Vec3:
    """Vector Minkowski-orthogonal to both ``a`` and ``b``."""
    c0 = a[1] * b[2] - a[2] * b[1]
    c1 = a[2] * b[0] - a[0] * b[2]
    c2 = a[0] * b[1] - a[1] * b[0]
    return (-c0, c1, c2)


def _scaled(v: Vec3, s: float) -> Vec3:
    return (v[0] * s, v[1] * s, v[2] * s)


def acosh1p(x: float) -> float:
    """``acosh(1 + x)`` without cancellation for small ``x >= 0``."""
    if x <= 0.0:
        return 0.0
    return math.log1p(x + math.sqrt(x * (x + 2.0)))


# ---------------------------------------------------------------- points

@dataclass(frozen=True)
class DiscPoint:
    x: float
    y: float

    def __post_init__(self):
        r2 = self.x * self.x + self.y * self.y
        if not r2 < MAX_RADIUS * MAX_RADIUS:
            raise DomainError(f"point ({self.x}, {self.y}) is not inside the open unit disc")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def to_hyperboloid(self) -> Vec3:
        r2 = self.norm2
        s = 1.0 / (1.0 - r2)
        return ((1.0 + r2) * s, 2.0 * self.x * s, 2.0 * self.y * s)

    @classmethod
    def from_hyperboloid(cls, X: Vec3) -> DiscPoint:
        s = 1.0 / (1.0 + X[0])
        return cls(X[1] * s, X[2] * s)

    @classmethod
    def from_complex(cls, z: complex) -> DiscPoint:
        return cls(z.real, z.imag)

    def rotated(self, angle: float) -> DiscPoint:
        c, s = math.cos(angle), math.sin(angle)
        return DiscPoint(c * self.x - s * self.y, s * self.x + c * self.y)

    def __iter__(self):
        yield self.x
        yield self.y


ORIGIN = DiscPoint(0.0, 0.0)


def dist(p: DiscPoint, q: DiscPoint) -> float:
    dx, dy = p.x - q.x, p.y - q.y
    num = 2.0 * (dx * dx + dy * dy)
    return acosh1p(num / ((1.0 - p.norm2) * (1.0 - q.norm2)))


def point_polar(theta: float, r: float) -> DiscPoint:
    if r < 0:
        raise DomainError("point_polar needs r >= 0")
    rho = math.tanh(0.5 * r)
    return DiscPoint(rho * math.cos(theta), rho * math.sin(theta))


def radial_distance(s: float) -> float:
    """Hyperbolic distance from the origin to a point at Euclidean radius ``s``."""
    return math.log((1.0 + s) / (1.0 - s))


# ---------------------------------------------------------------- geodesics

def _null_of_disc(w: complex) -> Vec3:
    return (1.0, w.real, w.imag)


@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic, stored by its ideal endpoints (unit complex numbers).

    Orientation runs from ``start`` to ``end``. Signed distances are positive
    on the left of the direction of travel.
    """

    start: complex
    end: complex

    def __post_init__(self):
        for w in (self.start, self.end):
            if abs(abs(w) - 1.0) > 1e-12:
                raise DomainError(f"ideal endpoint {w} is not on the unit circle")
        if abs(self.start - self.end) < 1e-14:
            raise DegenerateError("geodesic endpoints coincide")

    @classmethod
    def from_normal(cls, n: Vec3) -> Geodesic:
        """Geodesic ``{X : <X, n> = 0}`` oriented so that ``n`` points to its left."""
        sp = math.hypot(n[1], n[2])
        psi = math.atan2(n[2], n[1])
        half = math.acos(max(-1.0, min(1.0, n[0] / sp)))
        a = cmath.exp(1j * (psi + half))
        b = cmath.exp(1j * (psi - half))
        g = cls(a, b)
        if minkowski(g.normal, n) < 0:
            g = cls(b, a)
        return g

    @property
    def normal(self) -> Vec3:
        n = lorentz_cross(_null_of_disc(self.start), _null_of_disc(self.end))
        q = minkowski(n, n)
        if not q > 0:
            raise DegenerateError("geodesic endpoints coincide to working precision")
        return _scaled(n, 1.0 / math.sqrt(q))

    @property
    def is_diameter(self) -> bool:
        return abs(self.normal[0]) < 1e-12

    @property
    def direction(self) -> complex:
        """Unit direction of a diameter (from ``start`` to ``end``)."""
        return self.end

    @property
    def center(self) -> complex | None:
        n = self.normal
        if abs(n[0]) < 1e-12:
            return None
        return complex(n[1] / n[0], n[2] / n[0])

    @property
    def radius(self) -> float | None:
        c = self.center
        if c is None:
            return None
        return math.sqrt(abs(c) ** 2 - 1.0)

    def signed_distance(self, p: DiscPoint) -> float:
        return math.asinh(minkowski(p.to_hyperboloid(), self.normal))

    def contains(self, p: DiscPoint, tol: float = 1e-12) -> bool:
        return abs(self.signed_distance(p)) <= tol

    def tangent_at(self, p: DiscPoint) -> complex:
        """Euclidean unit tangent at ``p`` pointing toward ``end``."""
        c = self.center
        if c is None:
            t = self.end
        else:
            t = 1j * (p.z - c)
            if (t.conjugate() * (self.end - p.z)).real < 0:
                t = -t
        return t / abs(t)


def geodesic_through(p: DiscPoint, q: DiscPoint) -> Geodesic:
    """Geodesic through ``p`` then ``q``, oriented from ``p`` toward ``q``."""
    if p == q or dist(p, q) == 0.0:
        raise DegenerateError("geodesic_through needs two distinct points")
    # move p to the origin, where the geodesic is a diameter, and move its endpoints back
    P = p.z
    w = (q.z - P) / (1.0 - P.conjugate() * q.z)
    u = w / abs(w)
    a = (P - u) / (1.0 - P.conjugate() * u)
    b = (P + u) / (1.0 + P.conjugate() * u)
    return Geodesic(a / abs(a), b / abs(b))


def perpendicular_at(theta: float, r: float) -> Geodesic:
    """Geodesic perpendicular to the ray of angle ``theta`` at signed distance ``r``.

    Oriented so that its normal points back toward the origin side of the
    radial parameter (decreasing ``r``).
    """
    u = (math.cos(theta), math.sin(theta))
    n = (-math.sinh(r), -math.cosh(r) * u[0], -math.cosh(r) * u[1])
    return Geodesic.from_normal(n)


def project_to_geodesic(p: DiscPoint, g: Geodesic) -> tuple[DiscPoint, float]:
    """Nearest point of ``g`` to ``p`` and the signed distance (left positive)."""
    X = p.to_hyperboloid()
    n = g.normal
    sh = minkowski(X, n)
    ch = math.sqrt(1.0 + sh * sh)
    F = ((X[0] - sh * n[0]) / ch, (X[1] - sh * n[1]) / ch, (X[2] - sh * n[2]) / ch)
    return DiscPoint.from_hyperboloid(F), math.asinh(sh)


def intersect(g: Geodesic, h: Geodesic) -> DiscPoint:
    X = lorentz_cross(g.normal, h.normal)
    m = minkowski(X, X)
    if m >= 0:
        raise DegenerateError("geodesics do not meet inside the disc")
    X = _scaled(X, 1.0 / math.sqrt(-m))
    if X[0] < 0:
        X = _scaled(X, -1.0)
    return DiscPoint.from_hyperboloid(X)


def angle_at(g: Geodesic, h: Geodesic, p: DiscPoint) -> float:
    """Unoriented angle in ``[0, pi/2]`` between two geodesics crossing at ``p``."""
    t1, t2 = g.tangent_at(p), h.tangent_at(p)
    c = abs((t1.conjugate() * t2).real)
    return math.acos(min(1.0, c))


# ---------------------------------------------------------------- hypercycles

@dataclass(frozen=True)
class Hypercycle:
    """Points at signed distance ``signed_distance`` from ``axis``."""

    axis: Geodesic
    signed_distance: float

    def circle(self) -> tuple[complex, float] | None:
        """Euclidean center and radius of the locus, or ``None`` for a straight chord."""
        n = self.axis.normal
        sig = math.sinh(self.signed_distance)
        A = sig - n[0]
        if abs(A) < 1e-14:
            return None
        c = complex(-n[1] / A, -n[2] / A)
        return c, math.sqrt(abs(c) ** 2 + (n[0] + sig) / A)

    def residual(self, p: DiscPoint) -> float:
        return abs(self.axis.signed_distance(p) - self.signed_distance)

    def contains(self, p: DiscPoint, tol: float = 1e-10) -> bool:
        return self.residual(p) <= tol


# ---------------------------------------------------------------- quadrature oracles

def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 50) -> float:
    def simpson(fa, fm, fb, a, b):
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def rec(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, a, m)
        right = simpson(fm, frm, fb, m, b)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        return (rec(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + rec(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1))

    if a == b:
        return 0.0
    fa, fb, fm = f(a), f(b), f(0.5 * (a + b))
    return rec(a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, max_depth)


def curve_length(z, dz, t0: float, t1: float, tol: float = 1e-10) -> float:
    """Hyperbolic length of the parametrized curve ``z(t)``, ``t`` in ``[t0, t1]``."""
    def element(t):
        w = z(t)
        return 2.0 * abs(dz(t)) / (1.0 - abs(w) ** 2)
    return adaptive_simpson(element, t0, t1, tol)


def _arc_params(c: complex, R: float, a: complex, b: complex) -> tuple[float, float]:
    """Angles around ``c`` running from ``a`` to ``b`` along the arc inside the disc."""
    ta = cmath.phase(a - c)
    tb = cmath.phase(b - c)
    d = (tb - ta) % (2 * math.pi)
    mid = c + R * cmath.exp(1j * (ta + 0.5 * d))
    if abs(mid) >= 1.0:
        d -= 2 * math.pi
    return ta, ta + d


def _circle_or_chord_length(circle, a: complex, b: complex, tol: float) -> float:
    if a == b:
        return 0.0
    if circle is None:
        return curve_length(lambda t: a + t * (b - a), lambda t: b - a, 0.0, 1.0, tol)
    c, R = circle
    t0, t1 = _arc_params(c, R, a, b)
    lo, hi = min(t0, t1), max(t0, t1)
    return curve_length(lambda t: c + R * cmath.exp(1j * t),
                        lambda t: 1j * R * cmath.exp(1j * t), lo, hi, tol)


def geodesic_arclength(p: DiscPoint, q: DiscPoint, tol: float = 1e-10) -> float:
    """Length of the geodesic segment ``pq`` by quadrature of the length element."""
    if p == q:
        return 0.0
    g = geodesic_through(p, q)
    circle = None if g.center is None else (g.center, g.radius)
    return _circle_or_chord_length(circle, p.z, q.z, tol)


def hypercycle_arclength(h: Hypercycle, a: DiscPoint, b: DiscPoint, tol: float = 1e-10) -> float:
    """Length of the hypercycle arc between two of its points, by quadrature."""
    for p in (a, b):
        if not h.contains(p, 1e-10):
            raise DomainError(f"{p} is off the hypercycle (residual {h.residual(p):.3e})")
    # the integrand is smooth, so 0.1*tol per the Simpson error estimate keeps |err| < 1e-9
    return _circle_or_chord_length(h.circle(), a.z, b.z, 0.1 * tol)
