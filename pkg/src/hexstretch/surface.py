"""Bordered hyperbolic surfaces glued from right-angled hexagons along long edges.

The representation is purely combinatorial: a list of intrinsic hexagon
shapes plus long-edge gluings. Short edges assemble into the boundary
curves.

Corner conventions (all indices 0-based): long edge ``i`` of a hexagon runs
counterclockwise from its *start* corner to its *end* corner. Short edge
``j`` runs from the end corner of long edge ``(j+1) % 3`` to the start
corner of long edge ``(j+2) % 3``. A gluing with ``reversed=False`` matches
start with start (identity parametrization); ``reversed=True`` matches
start with end.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .config import DEFAULT_TOL, Tolerances
from .deform import K_min, deform
from .errors import DomainError, TraceError
from .hexagon import HexagonShape

EdgeRef = tuple[str, int]


@dataclass(frozen=True)
class Gluing:
    a: EdgeRef
    b: EdgeRef
    reversed: bool = False

    def to_json(self) -> dict:
        return {"a": [self.a[0], self.a[1]], "b": [self.b[0], self.b[1]], "reversed": self.reversed}


@dataclass(frozen=True)
class TriangulatedSurface:
    hexagons: tuple[tuple[str, HexagonShape], ...]
    gluings: tuple[Gluing, ...]
    allow_free: bool = False
    tol: Tolerances = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "hexagons", tuple((str(h), s) for h, s in self.hexagons))
        object.__setattr__(self, "gluings", tuple(self.gluings))

    @property
    def shapes(self) -> dict[str, HexagonShape]:
        return dict(self.hexagons)

    def partner(self) -> dict[EdgeRef, tuple[EdgeRef, bool, int]]:
        """Map each glued edge to (partner edge, reversed flag, gluing index)."""
        out = {}
        for n, g in enumerate(self.gluings):
            out.setdefault(g.a, (g.b, g.reversed, n))
            out.setdefault(g.b, (g.a, g.reversed, n))
        return out

    def to_json(self) -> dict:
        out = {
            "hexagons": [{"id": h, **s.to_json()} for h, s in self.hexagons],
            "gluings": [g.to_json() for g in self.gluings],
        }
        if self.allow_free:
            out["allow_free"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict, tol: Tolerances = DEFAULT_TOL) -> TriangulatedSurface:
        hexes = tuple((h["id"], HexagonShape.from_json(h, tol)) for h in obj["hexagons"])
        gl = tuple(Gluing((g["a"][0], int(g["a"][1])), (g["b"][0], int(g["b"][1])),
                          bool(g.get("reversed", False))) for g in obj["gluings"])
        return cls(hexes, gl, bool(obj.get("allow_free", False)), tol)


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class Violation:
    kind: str
    edges: tuple
    mismatch: float | None
    message: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": [list(e) for e in self.edges],
                "mismatch": self.mismatch, "message": self.message}


def validate(s: TriangulatedSurface) -> list[Violation]:
    out: list[Violation] = []
    shapes = s.shapes
    if len(shapes) != len(s.hexagons):
        out.append(Violation("duplicate-id", (), None, "hexagon ids are not unique"))
    seen: dict[EdgeRef, int] = {}
    for n, g in enumerate(s.gluings):
        ok = True
        for e in (g.a, g.b):
            if e[0] not in shapes or e[1] not in (0, 1, 2):
                out.append(Violation("unknown-edge", (e,), None, f"gluing {n} names unknown edge {e}"))
                ok = False
        if g.a == g.b:
            out.append(Violation("self-gluing", (g.a, g.b), None, f"gluing {n} glues {g.a} to itself"))
            ok = False
        for e in (g.a, g.b):
            if e in seen and seen[e] != n:
                out.append(Violation("multiply-glued", (e,), None,
                                     f"edge {e} appears in gluings {seen[e]} and {n}"))
            seen.setdefault(e, n)
        if ok:
            la = shapes[g.a[0]].half_longs[g.a[1]]
            lb = shapes[g.b[0]].half_longs[g.b[1]]
            if abs(la - lb) > s.tol.glue:
                out.append(Violation("length-mismatch", (g.a, g.b), abs(la - lb),
                                     f"gluing {n}: half-lengths {la!r} and {lb!r} differ by {abs(la - lb):.3g}"))
    if not s.allow_free:
        for h, _ in s.hexagons:
            for i in range(3):
                if (h, i) not in seen:
                    out.append(Violation("free-edge", ((h, i),), None, f"long edge {(h, i)} is not glued"))
    return out


def is_orientable(s: TriangulatedSurface) -> bool:
    """Whether hexagon orientations can be chosen compatibly with every gluing."""
    sign: dict[str, int] = {}
    adj: dict[str, list[tuple[str, int]]] = {h: [] for h, _ in s.hexagons}
    for g in s.gluings:
        rel = 1 if g.reversed else -1  # start-to-end keeps orientation; start-to-start flips it
        adj[g.a[0]].append((g.b[0], rel))
        adj[g.b[0]].append((g.a[0], rel))
    for root in adj:
        if root in sign:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            h = stack.pop()
            for nb, rel in adj[h]:
                want = sign[h] * rel
                if nb not in sign:
                    sign[nb] = want
                    stack.append(nb)
                elif sign[nb] != want:
                    return False
    return True


# ---------------------------------------------------------------- boundary

@dataclass(frozen=True)
class BoundaryCycle:
    short_edges: tuple[EdgeRef, ...]
    crossed: tuple[int, ...]  # gluing index crossed after each short edge
    length: float
    closed: bool = True
    error: str | None = None

    def to_json(self) -> dict:
        return {"short_edges": [list(e) for e in self.short_edges], "crossed": list(self.crossed),
                "length": self.length, "closed": self.closed, "error": self.error}


def _corners_of_short(j: int) -> tuple[tuple[int, bool], tuple[int, bool]]:
    """The two corners (long edge, is_end) bounding short edge ``j``."""
    return ((j + 1) % 3, True), ((j + 2) % 3, False)


def _short_of_corner(i: int, is_end: bool) -> int:
    return (i + 2) % 3 if is_end else (i + 1) % 3


def _walk(s, partner, h, j, exit_corner):
    """Follow the boundary from short edge ``(h, j)`` leaving through ``exit_corner``.

    Returns the visited short edges after the first, the gluings crossed and
    whether the walk closed up (``None`` if it hit a free long edge).
    """
    edges, crossed = [], []
    cur_h, cur_j, corner = h, j, exit_corner
    for _ in range(6 * len(s.hexagons) + 6):
        i, is_end = corner
        key = (cur_h, i)
        if key not in partner:
            return edges, crossed, (cur_h, i)
        (h2, i2), rev, n = partner[key]
        crossed.append(n)
        land_end = is_end != rev
        j2 = _short_of_corner(i2, land_end)
        if (h2, j2) == (h, j):
            return edges, crossed, None
        edges.append((h2, j2))
        c0, c1 = _corners_of_short(j2)
        corner = c1 if (i2, land_end) == c0 else c0
        cur_h, cur_j = h2, j2
    raise TraceError("boundary walk did not terminate")


def boundary_cycles(s: TriangulatedSurface, strict: bool = False) -> list[BoundaryCycle]:
    """Boundary components as cycles of short edges.

    Each walk starts at the lowest unvisited short edge and leaves through
    the corner at the start of long edge ``(j+2) % 3``. A walk that reaches an
    unglued long edge is returned as an open chain with ``closed=False``, or
    raises :class:`TraceError` when ``strict``.
    """
    partner = s.partner()
    shapes = s.shapes
    visited: set[EdgeRef] = set()
    out = []
    for h, _ in s.hexagons:
        for j in range(3):
            if (h, j) in visited:
                continue
            fwd, cfwd, free = _walk(s, partner, h, j, _corners_of_short(j)[1])
            if free is None:
                chain, crossed, closed, err = [(h, j)] + fwd, cfwd, True, None
            else:
                back, cback, free2 = _walk(s, partner, h, j, _corners_of_short(j)[0])
                chain = list(reversed(back)) + [(h, j)] + fwd
                crossed = list(reversed(cback)) + cfwd
                closed = False
                err = f"boundary reaches unglued long edges {free2} and {free}"
                if strict:
                    raise TraceError(err)
            visited.update(chain)
            length = math.fsum(shapes[e[0]].lambdas[e[1]] for e in chain)
            out.append(BoundaryCycle(tuple(chain), tuple(crossed), length, closed, err))
    return out


# ---------------------------------------------------------------- deformation

def surface_K_min(s: TriangulatedSurface) -> tuple[float, str]:
    h, shape = max(s.hexagons, key=lambda hs: K_min(hs[1]))
    return K_min(shape), h


def deform_surface(s: TriangulatedSurface, K: float) -> TriangulatedSurface:
    kmin, h = surface_K_min(s)
    if not K > kmin:
        raise DomainError(f"K={K!r} is not admissible: hexagon {h!r} needs K > {kmin!r}")
    hexes = tuple((hid, deform(shape, K, s.tol).deformed) for hid, shape in s.hexagons)
    return TriangulatedSurface(hexes, s.gluings, s.allow_free, s.tol)


def surface_k(s: TriangulatedSurface, K: float) -> tuple[float, dict[int, float]]:
    """Largest long-edge stretch factor over all hexagons, and the factor per gluing."""
    kmin, h = surface_K_min(s)
    if not K > kmin:
        raise DomainError(f"K={K!r} is not admissible: hexagon {h!r} needs K > {kmin!r}")
    fams = {hid: deform(shape, K, s.tol) for hid, shape in s.hexagons}
    k = max(f.k for f in fams.values())
    per_edge = {n: fams[g.a[0]].ks[g.a[1]] for n, g in enumerate(s.gluings)}
    return k, per_edge


def edge_stretch_pair(s: TriangulatedSurface, n: int, K: float) -> tuple[float, float]:
    """Stretch factor of gluing ``n`` computed from each adjacent hexagon."""
    g = s.gluings[n]
    sh = s.shapes
    return (deform(sh[g.a[0]], K, s.tol).ks[g.a[1]], deform(sh[g.b[0]], K, s.tol).ks[g.b[1]])


@dataclass(frozen=True)
class MetricCertificate:
    K1: float
    K2: float
    lower_bound: float
    upper_bound: float
    gap: float
    arc: int | None  # gluing realizing the lower bound

    @property
    def geodesic_grade(self) -> bool:
        return self.gap <= 1e-10

    def to_json(self) -> dict:
        return {"K1": self.K1, "K2": self.K2, "lower_bound": self.lower_bound,
                "upper_bound": self.upper_bound, "gap": self.gap, "arc": self.arc,
                "geodesic_grade": self.geodesic_grade}


def arc_certificate(s: TriangulatedSurface, K1: float, K2: float) -> MetricCertificate:
    """Sandwich the distance from ``S_K1`` to ``S_K2`` in the arc and Lipschitz metrics.

    Lower bound: largest log length ratio over the glued long edges, each an
    orthogeodesic arc of the surface. Upper bound: log of the Lipschitz
    constant of the hexagon-wise map from ``S_K1`` to ``S_K2``.
    """
    if K2 < K1:
        raise DomainError(f"need K1 <= K2, got {K1!r} > {K2!r}")
    s1 = s if K1 == 1.0 else deform_surface(s, K1)
    s2 = s if K2 == 1.0 else deform_surface(s, K2)
    if not s.gluings:
        raise DomainError("no glued edges to certify against")
    ratios = []
    for n, g in enumerate(s.gluings):
        l1 = s1.shapes[g.a[0]].half_longs[g.a[1]]
        l2 = s2.shapes[g.a[0]].half_longs[g.a[1]]
        ratios.append((math.log(l2 / l1), -n))
    lower, neg_n = max(ratios)
    k, _ = surface_k(s1, K2 / K1)
    upper = math.log(k)
    return MetricCertificate(K1, K2, lower, upper, upper - lower, -neg_n)


# ---------------------------------------------------------------- Luo coordinates

def _gluing_index(s: TriangulatedSurface, e) -> int:
    if isinstance(e, int):
        if not 0 <= e < len(s.gluings):
            raise DomainError(f"unknown gluing index {e!r}")
        return e
    ref = (str(e[0]), int(e[1]))
    p = s.partner()
    if ref not in p:
        raise DomainError(f"edge {ref} is not glued")
    return p[ref][2]


def luo_radius(s: TriangulatedSurface, e) -> float:
    """Mean of the two adjacent strip widths ``L`` at a glued edge (gluing index or edge ref)."""
    g = s.gluings[_gluing_index(s, e)]
    sh = s.shapes
    return 0.5 * (sh[g.a[0]].Ls[g.a[1]] + sh[g.b[0]].Ls[g.b[1]])


def cycle_sum(s: TriangulatedSurface, cycle) -> float:
    return math.fsum(luo_radius(s, e) for e in cycle)


# ---------------------------------------------------------------- fixtures

def doubled(shape: HexagonShape, ids=("h0", "h1")) -> TriangulatedSurface:
    """Pair of pants: two copies of ``shape`` glued by the identity along all long edges."""
    a, b = ids
    return TriangulatedSurface(((a, shape), (b, shape)),
                               tuple(Gluing((a, i), (b, i), False) for i in range(3)))


def one_holed_torus(shape: HexagonShape, ids=("h0", "h1")) -> TriangulatedSurface:
    """Orientable surface with one boundary curve from two copies of ``shape``.

    Found by exhaustive search over the matchings of the six long edges;
    the first matching (in a fixed enumeration order) with compatible
    lengths, orientability and a single boundary cycle wins.
    """
    a, b = ids
    edges = [(a, 0), (a, 1), (a, 2), (b, 0), (b, 1), (b, 2)]
    base = TriangulatedSurface(((a, shape), (b, shape)), ())
    for pairs in _matchings(edges):
        for flags in itertools.product((True, False), repeat=3):
            gl = tuple(Gluing(x, y, f) for (x, y), f in zip(pairs, flags))
            cand = TriangulatedSurface(base.hexagons, gl, False, base.tol)
            if validate(cand) or not is_orientable(cand):
                continue
            if len(boundary_cycles(cand)) == 1:
                return cand
    raise DomainError("no one-holed torus gluing exists for this hexagon")


def _matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m
