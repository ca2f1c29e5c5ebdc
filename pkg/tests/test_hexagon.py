import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexstretch.errors import DomainError, OutOfChart, OutsideHexagon
from hexstretch.hexagon import (FoliationCoord, HexagonShape, HexType, classify_short, embed,
                                hexagon_from_alphas_d, hexagon_from_half_longs, hexagon_identity_residuals,
                                realizable)
from hexstretch.hyperbolic import (ORIGIN, DiscPoint, Hypercycle, adaptive_simpson, angle_at, dist,
                                   geodesic_arclength, hypercycle_arclength, project_to_geodesic)

from fixtures import REGULAR, SCALENE
from oracles import lambert_area, law_of_sines_hexagon, regular_hexagon_short


def random_triples(n, seed, lo=0.2, hi=3.0, type_i=False):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        t = tuple(rng.uniform(lo, hi) for _ in range(3))
        if not realizable(t):
            continue
        if type_i and hexagon_from_half_longs(t).hex_type is not HexType.I:
            continue
        out.append(t)
    return out


# ---------------------------------------------------------------- construction

def test_regular_from_alphas(regular):
    a = math.pi / 3
    h = hexagon_from_alphas_d((a, a, a), math.acosh(math.cosh(1.0) / math.sin(a)))
    assert h.hex_type is HexType.I
    for x in h.half_longs:
        assert abs(x - 1.0) <= 1e-12
    for x in h.Ls:
        assert abs(x - REGULAR["L"]) <= 1e-12
    for x in h.lambdas:
        assert abs(x - REGULAR["lambda"]) <= 1e-12
        assert abs(x - regular_hexagon_short(1.0)) <= 1e-12


def test_type_ii_and_iii(type_ii, type_iii):
    assert type_ii.hex_type is HexType.II and type_ii.Ls[0] == 0.0
    assert type_iii.hex_type is HexType.III and type_iii.Ls[0] < 0


def test_alphas_domain_errors():
    with pytest.raises(DomainError, match=r"sector\(s\) \[1, 2, 3\]"):
        hexagon_from_alphas_d((math.pi / 3,) * 3, 0.2)
    with pytest.raises(DomainError):
        hexagon_from_alphas_d((1.0, 1.0, 1.0), 1.0)
    with pytest.raises(DomainError):
        hexagon_from_alphas_d((1.6, 1.6, math.pi - 3.2), 2.0)


def test_alphas_renormalized_exactly():
    h = hexagon_from_alphas_d((1.0, 1.0, math.pi - 2.0 + 5e-10), 2.0)
    assert abs(math.fsum(h.alphas) - math.pi) <= 4 * math.ulp(math.pi)


def test_solve_regular(regular):
    assert abs(regular.d - REGULAR["d"]) <= 1e-12
    assert abs(regular.d - 1.1807) <= 1e-4 and abs(regular.lambdas[0] - 0.8272) <= 1e-4
    for a in regular.alphas:
        assert abs(a - math.pi / 3) <= 1e-12
    assert max(hexagon_identity_residuals(regular)) <= 1e-9


def test_solve_scalene_matches_closed_form(scalene):
    alphas, d = law_of_sines_hexagon((0.8, 1.0, 1.2))
    assert abs(scalene.d - d) <= 1e-12
    for x, y, z in zip(scalene.alphas, alphas, SCALENE["alphas"]):
        assert abs(x - y) <= 1e-12 and abs(x - z) <= 1e-12
    for x, z in zip(scalene.lambdas, SCALENE["lambda"]):
        assert abs(x - z) <= 1e-12
    assert max(hexagon_identity_residuals(scalene)) <= 1e-9
    assert abs(math.fsum(scalene.alphas) - math.pi) <= 1e-12


def test_permutation_equivariance(scalene):
    other = hexagon_from_half_longs((1.2, 0.8, 1.0))
    for i in range(3):
        j = (i + 1) % 3
        assert abs(other.alphas[j] - scalene.alphas[i]) <= 1e-12
        assert abs(other.Ls[j] - scalene.Ls[i]) <= 1e-12
    assert abs(other.d - scalene.d) <= 1e-12


def test_obtuse_branch_solutions():
    h = hexagon_from_half_longs((0.5, 0.5, 1.4))
    assert h.hex_type is HexType.III and h.alphas[2] > math.pi / 2
    alphas, d = law_of_sines_hexagon((0.5, 0.5, 1.4))
    assert abs(h.d - d) <= 1e-10
    assert max(abs(x - y) for x, y in zip(h.alphas, alphas)) <= 1e-10
    assert max(hexagon_identity_residuals(h)) <= 1e-9


def test_unrealizable_triple_raises():
    assert not realizable((0.2, 0.2, 3.0))
    with pytest.raises(DomainError, match="triangle inequality"):
        hexagon_from_half_longs((0.2, 0.2, 3.0))


def test_round_trip_corpus():
    worst_ell = worst_id = worst_sum = 0.0
    for t in random_triples(200, seed=11):
        h = hexagon_from_half_longs(t)
        worst_ell = max(worst_ell, max(abs(a - b) for a, b in zip(h.half_longs, t)))
        worst_id = max(worst_id, max(hexagon_identity_residuals(h)))
        worst_sum = max(worst_sum, abs(math.fsum(h.alphas) - math.pi))
        assert classify_short(h.lambdas, rel_tol=1e-9) is h.hex_type
    assert worst_ell <= 1e-10
    assert worst_id <= 1e-9
    assert worst_sum <= 1e-12


@settings(max_examples=150, deadline=None)
@given(st.tuples(st.floats(0.2, 3.0), st.floats(0.2, 3.0), st.floats(0.2, 3.0)))
def test_solver_agrees_with_law_of_sines(t):
    if not realizable(t):
        with pytest.raises(DomainError):
            hexagon_from_half_longs(t)
        return
    h = hexagon_from_half_longs(t)
    _, d = law_of_sines_hexagon(t)
    assert abs(h.d - d) <= 1e-9 * max(1.0, d)
    assert sum(L <= 0 for L in h.Ls) <= 1


def test_classify_short_examples():
    assert classify_short((1, 1, 1)) is HexType.I
    assert classify_short((1, 2, 3)) is HexType.II
    assert classify_short((1, 1, 3)) is HexType.III


def test_json_round_trip(scalene):
    again = HexagonShape.from_json(scalene.to_json())
    assert again == scalene


# ---------------------------------------------------------------- embedding

def _measured_angles(e, c):
    found = []
    for g in e.long_edge_geodesics:
        for s in e.short_edge_geodesics:
            if g.contains(c, 1e-9) and s.contains(c, 1e-9):
                found.append(angle_at(g, s, c))
    return found


def test_regular_embedding(regular):
    e = embed(regular)
    radii = [math.hypot(p.x, p.y) for p in e.feet]
    for r in radii:
        assert abs(r - REGULAR["foot_radius"]) <= 1e-12
    angs = sorted(math.atan2(p.y, p.x) % (2 * math.pi) for p in e.feet)
    for a, b in zip(angs, angs[1:]):
        assert abs(b - a - 2 * math.pi / 3) <= 1e-12


def test_regular_rotation_symmetry(regular):
    e = embed(regular)
    rotated = [p.rotated(2 * math.pi / 3) for p in e.corners]
    for p in rotated:
        assert min(dist(p, q) for q in e.corners) <= 1e-12


@pytest.mark.parametrize("name", ["regular", "scalene", "type_ii", "type_iii"])
def test_embedding_metrology(name, request):
    sh = request.getfixturevalue(name)
    e = embed(sh)
    for i in range(3):
        assert abs(dist(ORIGIN, e.feet[i]) - sh.d) <= 1e-10
        assert abs(geodesic_arclength(e.corner(i, False), e.corner(i, True)) - 2 * sh.half_longs[i]) <= 1e-8
        p, q = e.short_edge_endpoints(i)
        assert abs(geodesic_arclength(p, q) - sh.lambdas[i]) <= 1e-8
        # distance from O to the long-edge line
        _, sd = project_to_geodesic(ORIGIN, e.long_edge_geodesics[i])
        assert abs(abs(sd) - abs(sh.Ls[i] + sh.hs[i])) <= 1e-9
    for c in e.corners:
        angs = _measured_angles(e, c)
        assert len(angs) == 1 and abs(angs[0] - math.pi / 2) <= 1e-9


def test_tripod_angles(scalene):
    e = embed(scalene)
    for i in range(3):
        a, b = e.feet[(i + 1) % 3], e.feet[(i + 2) % 3]
        ang = abs(math.atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y))
        assert abs(ang - 2 * scalene.alphas[i]) <= 1e-10 or abs(2 * math.pi - ang - 2 * scalene.alphas[i]) <= 1e-10


def test_canonical_placement(scalene):
    e = embed(scalene)
    a1, a2, _ = scalene.alphas
    assert abs(math.atan2(e.feet[1].y, e.feet[1].x) + a1) <= 1e-12
    assert abs(math.atan2(e.feet[2].y, e.feet[2].x) - a1) <= 1e-12
    assert abs(math.atan2(e.feet[0].y, e.feet[0].x) - (a1 + 2 * a2)) <= 1e-12
    mid = e.coord_to_point(FoliationCoord(1, 0.0, 1.0))
    assert abs(mid.y) <= 1e-15 and mid.x > 0


def test_type_iii_center_outside(type_iii):
    e = embed(type_iii)
    assert not e.contains(ORIGIN)


# ---------------------------------------------------------------- chart

def test_chart_examples(scalene):
    e = embed(scalene)
    for s in (1, 2, 3):
        i = s - 1
        mid = e.coord_to_point(FoliationCoord(s, 0.0, 1.0))
        ends = (e.corner(i, False), e.corner(i, True))
        assert abs(dist(mid, ends[0]) - dist(mid, ends[1])) <= 1e-12
        assert e.coord_to_point(FoliationCoord(s, 2.0, 1.0)) == ORIGIN
        assert dist(e.coord_to_point(FoliationCoord(s, 1.0, 0.0)), e.feet[(i + 1) % 3]) <= 1e-9
        assert dist(e.coord_to_point(FoliationCoord(s, 1.0, 2.0)), e.feet[(i + 2) % 3]) <= 1e-9
        c = e.point_to_coord(mid)
        assert c.sector == s and abs(c.u) <= 1e-12 and abs(c.v - 1.0) <= 1e-12
    c = e.point_to_coord(ORIGIN)
    assert (c.u, c.v) == (2.0, 1.0)


def test_tripod_edges_agree_between_sectors(scalene):
    e = embed(scalene)
    for k in range(3):
        # foot A_k is the v=0 end of sector k-1 and the v=2 end of sector k-2 (0-based)
        s_lo, s_hi = (k - 1) % 3 + 1, (k - 2) % 3 + 1
        p = e.coord_to_point(FoliationCoord(s_lo, 1.3, 0.0))
        q = e.coord_to_point(FoliationCoord(s_hi, 1.3, 2.0))
        assert dist(p, q) <= 1e-12
        assert abs(dist(p, e.feet[k]) - 0.3 * scalene.d) <= 1e-12
        c = e.point_to_coord(p)
        assert abs(c.u - 1.3) <= 1e-9


@pytest.mark.parametrize("name", ["regular", "scalene"])
def test_chart_bijectivity_grid(name, request):
    e = embed(request.getfixturevalue(name))
    worst = 0.0
    for s in (1, 2, 3):
        for ju in range(50):
            for jv in range(50):
                c = FoliationCoord(s, 2.0 * ju / 49, 2.0 * jv / 49)
                p = e.coord_to_point(c)
                c2 = e.point_to_coord(p)
                worst = max(worst, dist(p, e.coord_to_point(c2)))
                if 0 < c.u < 2 and 0 < c.v < 2:
                    assert c2.sector == s
                    assert abs(c2.u - c.u) <= 1e-9 and abs(c2.v - c.v) <= 1e-6
    assert worst <= 1e-9


@pytest.mark.parametrize("name", ["type_ii", "type_iii"])
def test_restricted_charts_cover_hexagon(name, request):
    e = embed(request.getfixturevalue(name))
    assert not e.chartable(0)
    with pytest.raises(OutOfChart):
        e.coord_to_point(FoliationCoord(1, 0.5, 1.0))
    rng = random.Random(3)
    Xs = [c.to_hyperboloid() for c in e.corners]
    for _ in range(500):
        w = [rng.random() ** 3 for _ in Xs]
        X = [sum(wi * x[k] for wi, x in zip(w, Xs)) for k in range(3)]
        n = math.sqrt(X[0] ** 2 - X[1] ** 2 - X[2] ** 2)
        p = DiscPoint.from_hyperboloid(tuple(x / n for x in X))
        c = e.point_to_coord(p)
        assert c.sector in (2, 3)
        assert dist(p, e.coord_to_point(c)) <= 1e-9


def test_outside_point_rejected(scalene):
    e = embed(scalene)
    with pytest.raises(OutsideHexagon):
        e.point_to_coord(DiscPoint(0.95, 0.0))


def test_leaf_metric_law(scalene):
    e = embed(scalene)
    for s in (1, 2, 3):
        i = s - 1
        L, ell = scalene.Ls[i], scalene.half_longs[i]
        for u in (0.0, 0.25, 0.5, 0.75, 1.0):
            a = e.coord_to_point(FoliationCoord(s, u, 0.0))
            b = e.coord_to_point(FoliationCoord(s, u, 2.0))
            hc = Hypercycle(e.long_edge_geodesics[i], u * L)
            assert abs(hypercycle_arclength(hc, a, b) - math.cosh(u * L) * 2 * ell) <= 1e-8


def _sector_area(e, i):
    sh = e.shape
    L, ell, top = sh.Ls[i], sh.half_longs[i], sh.Ls[i] + sh.hs[i]

    def width(delta):
        r = math.sinh(delta) / math.sinh(L)
        u = 1.0 + math.acosh(max(1.0, r)) / sh.d
        return 2.0 * e.central_leaf(i, min(2.0, u))[0] * math.cosh(delta)

    rect = 2 * ell * math.sinh(L)
    # substitute delta = L + (top - L) * w^2 to absorb the square-root singularity at u = 1
    central = adaptive_simpson(lambda w: width(L + (top - L) * w * w) * 2 * (top - L) * w, 0.0, 1.0, 1e-12)
    return rect + central


@pytest.mark.parametrize("name", ["regular", "scalene"])
def test_sector_area_matches_angle_defect(name, request):
    sh = request.getfixturevalue(name)
    e = embed(sh)
    for i in range(3):
        assert abs(_sector_area(e, i) - 2 * lambert_area(sh.alphas[i])) <= 1e-8


def test_type_ii_limit():
    d = 1.5
    below = hexagon_from_alphas_d((math.pi / 2 - 1e-4, math.pi / 4 + 5e-5, math.pi / 4 + 5e-5), d)
    above = hexagon_from_alphas_d((math.pi / 2 + 1e-4, math.pi / 4 - 5e-5, math.pi / 4 - 5e-5), d)
    assert 0 < below.Ls[0] < 1e-3 and -1e-3 < above.Ls[0] < 0
    assert below.hex_type is HexType.I and above.hex_type is HexType.III
    area = _sector_area(embed(below), 0)
    assert 0 < area < 3e-4
    assert abs(area - 2 * lambert_area(below.alphas[0])) <= 1e-8
