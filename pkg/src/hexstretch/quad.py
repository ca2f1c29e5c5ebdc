"""Trirectangular quadrilaterals ``O A B C``.

Right angles sit at ``A``, ``B`` and ``C``; the angle at ``O`` is ``alpha``.
Side ``OA`` has length ``d``, ``AB`` has length ``L``, ``BC`` has length
``ell`` and ``OC`` has length ``L + h``. When ``alpha > pi/2`` the same
relations hold with ``L`` and ``h`` negative: the quadrilateral is then the
mirror image, across ``OA``, of the one with vertex angle ``pi - alpha``.

Construction uses three relations only::

    cosh ell      = sin(alpha) cosh d
    tanh L        = cos(alpha) / (sin(alpha) sinh d)
    sinh(L + h)   = cosh d sinh L

The remaining four relations in :func:`quad_residuals` are never used to
build values, so they serve as an independent consistency check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateError, DomainError, IdealLimit

IDEAL_TOL = 1e-12


@dataclass(frozen=True)
class QuadShape:
    alpha: float
    d: float
    ell: float
    L: float | None
    h: float | None
    s_param: float
    t_param: float
    ideal: bool = False

    @property
    def oc(self) -> float | None:
        """Length of side ``OC`` (signed)."""
        return None if self.ideal else self.L + self.h


def t_from_s(alpha: float, s: float) -> float:
    return s * math.cos(alpha) / (1.0 + math.sin(alpha))


def _min_d(alpha: float) -> float:
    return math.acosh(1.0 / math.sin(alpha))


def quad_from_alpha_d(alpha: float, d: float) -> QuadShape:
    """Solve the quadrilateral with vertex angle ``alpha`` and tripod side ``d``.

    At the ideal limit ``sin(alpha) cosh(d) = 1`` the side ``BC`` shrinks to
    a point at infinity; the returned shape has ``ideal=True``, ``ell = 0`` and
    ``L = h = None``.
    """
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"alpha={alpha!r} must lie in (0, pi)")
    if not d > 0.0 or not math.isfinite(d):
        raise DomainError(f"d={d!r} must be positive and finite")
    if alpha == 0.5 * math.pi:
        raise DegenerateError("alpha = pi/2 collapses the quadrilateral; use quad_degenerate")

    sa, ca = math.sin(alpha), math.cos(alpha)
    ch = sa * math.cosh(d)
    s = math.tanh(0.5 * d)
    t = t_from_s(alpha, s)
    if abs(ch - 1.0) <= IDEAL_TOL:
        return QuadShape(alpha, d, 0.0, None, None, s, t, ideal=True)
    if ch < 1.0:
        raise DomainError(
            f"sin(alpha) cosh(d) = {ch:.17g} < 1; for alpha={alpha!r} need d >= {_min_d(alpha):.17g}")

    ell = math.acosh(ch)
    L = math.atanh(ca / (sa * math.sinh(d)))
    oc = math.asinh(math.cosh(d) * math.sinh(L))
    return QuadShape(alpha, d, ell, L, oc - L, s, t)


def quad_degenerate(d: float) -> QuadShape:
    """The collapsed quadrilateral at ``alpha = pi/2``: ``BC`` lies on ``OA``."""
    if not d > 0.0:
        raise DomainError(f"d={d!r} must be positive")
    return QuadShape(0.5 * math.pi, d, d, 0.0, 0.0, math.tanh(0.5 * d), 0.0)


def quad_residuals(q: QuadShape) -> tuple[float, ...]:
    """Absolute residuals of the seven quadrilateral relations, in order.

    The first entry combines both equalities of the sine-rule relation
    (``cosh ell = sin(alpha) cosh d`` and ``sinh(L+h) = cosh d sinh L``).
    Quotients are cleared so the degenerate shape has finite residuals.
    """
    if q.ideal:
        raise DomainError("residuals are undefined at the ideal limit")
    a, d, ell, L = q.alpha, q.d, q.ell, q.L
    m = L + q.h
    sa, ca = math.sin(a), math.cos(a)
    if a == 0.5 * math.pi:
        ca = 0.0
    chd, shd = math.cosh(d), math.sinh(d)
    chl, shl = math.cosh(ell), math.sinh(ell)
    chm, shm = math.cosh(m), math.sinh(m)
    chL, shL = math.cosh(L), math.sinh(L)
    return (
        max(abs(chl - sa * chd), abs(shm - chd * shL)),
        abs(shl - (shd * chm - chd * shm * ca)),
        abs(shd - shl * chm),
        abs(ca - shL * shl),
        abs(sa * shL * shd - ca * chL),
        abs(chm - (-shl * shd + chl * chd * chL)),
        abs(chL - sa * chm),
    )


def tanh_L_from_s(alpha: float, s: float) -> float:
    """``tanh L`` of the quadrilateral whose tripod foot sits at Euclidean radius ``s``."""
    if not 0.0 < s < 1.0:
        raise DomainError(f"s={s!r} must lie in (0, 1)")
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"alpha={alpha!r} must lie in (0, pi)")
    if alpha == 0.5 * math.pi:
        return 0.0
    return math.cos(alpha) / math.sin(alpha) * (1.0 - s * s) / (2.0 * s)


def L_from_s(alpha: float, s: float) -> float:
    arg = tanh_L_from_s(alpha, s)
    if abs(abs(arg) - 1.0) <= IDEAL_TOL:
        raise IdealLimit(f"tanh L = {arg:.17g} at s={s!r}: long edge is at infinity")
    if abs(arg) > 1.0:
        raise DomainError(f"tanh L = {arg:.17g} exceeds 1 in magnitude; s={s!r} is beyond the ideal limit")
    return math.atanh(arg)


def ideal_s(alpha: float) -> float:
    """Euclidean radius ``s`` at which the long edge becomes ideal (acute ``alpha``)."""
    if not 0.0 < alpha < 0.5 * math.pi:
        raise DomainError("the ideal limit exists only for acute alpha")
    # root of s^2 + 2 tan(alpha) s - 1 = 0
    ta = math.tan(alpha)
    return 1.0 / (ta + math.sqrt(ta * ta + 1.0))
