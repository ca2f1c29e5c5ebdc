import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexstretch.errors import DomainError, TraceError
from hexstretch.hexagon import HexType, hexagon_from_half_longs, realizable
from hexstretch.surface import (Gluing, TriangulatedSurface, arc_certificate, boundary_cycles, cycle_sum,
                                deform_surface, doubled, edge_stretch_pair, is_orientable, luo_radius,
                                one_holed_torus, surface_k, validate)

from fixtures import REGULAR, REGULAR_K2, SCALENE, SCALENE_K2
from oracles import boundary_components


def _oracle(s):
    return boundary_components([h for h, _ in s.hexagons],
                               [(g.a, g.b, g.reversed) for g in s.gluings])


def _kinds(s):
    return sorted(v.kind for v in validate(s))


# ---------------------------------------------------------------- validation

def test_pants_valid(pants_regular, pants_scalene):
    assert validate(pants_regular) == [] and validate(pants_scalene) == []
    assert is_orientable(pants_regular)


def test_length_mismatch_reported():
    a, b = hexagon_from_half_longs((1.0, 1.0, 1.0)), hexagon_from_half_longs((1.1, 1.0, 1.0))
    s = TriangulatedSurface((("a", a), ("b", b)), tuple(Gluing(("a", i), ("b", i)) for i in range(3)))
    v = validate(s)
    assert [x.kind for x in v] == ["length-mismatch"]
    assert v[0].mismatch == pytest.approx(0.1, abs=1e-12)
    assert v[0].edges == (("a", 0), ("b", 0))


def test_edge_in_two_gluings(regular):
    s = TriangulatedSurface((("a", regular), ("b", regular)),
                            (Gluing(("a", 0), ("b", 0)), Gluing(("a", 0), ("b", 1)), Gluing(("a", 1), ("b", 2))))
    assert "multiply-glued" in _kinds(s)


def test_other_violations(regular):
    h = (("a", regular),)
    assert "self-gluing" in _kinds(TriangulatedSurface(h, (Gluing(("a", 0), ("a", 0)),), allow_free=True))
    assert "unknown-edge" in _kinds(TriangulatedSurface(h, (Gluing(("a", 0), ("z", 0)),), allow_free=True))
    assert "unknown-edge" in _kinds(TriangulatedSurface(h, (Gluing(("a", 0), ("a", 3)),), allow_free=True))
    assert _kinds(TriangulatedSurface(h, (Gluing(("a", 0), ("a", 1)),))) == ["free-edge"]
    assert _kinds(TriangulatedSurface(h, (Gluing(("a", 0), ("a", 1)),), allow_free=True)) == []
    assert "duplicate-id" in _kinds(TriangulatedSurface((("a", regular), ("a", regular)), ()))


def test_json_round_trip(pants_scalene):
    again = TriangulatedSurface.from_json(pants_scalene.to_json())
    assert again == pants_scalene


# ---------------------------------------------------------------- boundaries

def test_regular_pants_boundaries(pants_regular):
    cycles = boundary_cycles(pants_regular)
    assert len(cycles) == 3
    for c in cycles:
        assert c.closed and len(c.short_edges) == 2
        assert abs(c.length - 2 * REGULAR["lambda"]) <= 1e-12
    assert sorted(set(c.short_edges) for c in cycles) == _oracle(pants_regular)


def test_scalene_pants_boundaries(pants_scalene):
    lengths = sorted(c.length for c in boundary_cycles(pants_scalene))
    assert max(abs(x - 2 * y) for x, y in zip(lengths, sorted(SCALENE["lambda"]))) <= 1e-12


def test_one_holed_torus(regular):
    s = one_holed_torus(regular)
    assert validate(s) == [] and is_orientable(s)
    cycles = boundary_cycles(s)
    assert len(cycles) == 1 and len(cycles[0].short_edges) == 6
    assert abs(cycles[0].length - 6 * REGULAR["lambda"]) <= 1e-12
    assert [set(cycles[0].short_edges)] == _oracle(s)


def test_single_hexagon_cannot_close_to_one_boundary(regular):
    # one hexagon has an odd number of long edges, so some edge always stays free
    h = (("a", regular),)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for rev in (False, True):
            s = TriangulatedSurface(h, (Gluing(("a", i), ("a", j), rev),))
            assert "free-edge" in _kinds(s)


@pytest.mark.parametrize("flags", [(False, False, False), (True, True, True), (True, False, True)])
def test_trace_matches_union_find(scalene, flags):
    s = TriangulatedSurface((("p", scalene), ("q", scalene)),
                            tuple(Gluing(("p", i), ("q", i), f) for i, f in zip(range(3), flags)))
    got = sorted(set(c.short_edges) for c in boundary_cycles(s))
    assert got == _oracle(s)
    assert sum(len(c) for c in got) == 6


def test_free_edges_give_open_chains(regular):
    s = TriangulatedSurface((("a", regular), ("b", regular)), (Gluing(("a", 0), ("b", 0)),), allow_free=True)
    cycles = boundary_cycles(s)
    assert any(not c.closed for c in cycles)
    assert sum(len(c.short_edges) for c in cycles) == 6
    with pytest.raises(TraceError):
        boundary_cycles(s, strict=True)


# ---------------------------------------------------------------- deformation

def test_deform_identity(pants_scalene):
    assert deform_surface(pants_scalene, 1.0) == pants_scalene
    k, per_edge = surface_k(pants_scalene, 1.0)
    assert k == 1.0 and set(per_edge.values()) == {1.0}


def test_deformed_surfaces_stay_glued(pants_scalene, regular):
    torus = one_holed_torus(regular)
    for K in [0.8 + 0.25 * n for n in range(20)]:
        for s in (pants_scalene, torus):
            d = deform_surface(s, K)
            assert validate(d) == []
            for g in d.gluings:
                la = d.shapes[g.a[0]].half_longs[g.a[1]]
                lb = d.shapes[g.b[0]].half_longs[g.b[1]]
                assert abs(la - lb) <= 1e-10


def test_boundary_lengths_strictly_decrease(pants_scalene):
    prev = [c.length for c in boundary_cycles(pants_scalene)]
    for n in range(1, 21):
        cur = [c.length for c in boundary_cycles(deform_surface(pants_scalene, 1 + 0.25 * n))]
        assert all(x < y for x, y in zip(cur, prev))
        prev = cur


def test_regular_pants_K2(pants_regular):
    d = deform_surface(pants_regular, 2.0)
    lengths = [c.length for c in boundary_cycles(d)]
    lam = d.shapes["h0"].lambdas[0]
    assert max(abs(x - 2 * lam) for x in lengths) <= 1e-12
    assert 2 * lam < 2 * REGULAR["lambda"]
    k, _ = surface_k(pants_regular, 2.0)
    assert abs(k - REGULAR_K2["k"]) <= 1e-12


def test_scalene_pants_ratios_distinct(pants_scalene):
    before = [c.length for c in boundary_cycles(pants_scalene)]
    after = [c.length for c in boundary_cycles(deform_surface(pants_scalene, 2.0))]
    r = [a / b for a, b in zip(after, before)]
    for i in range(3):
        for j in range(i + 1, 3):
            assert abs(r[i] - r[j]) > 1e-6


def test_surface_k_scalene(pants_scalene):
    k, per_edge = surface_k(pants_scalene, 2.0)
    assert abs(k - SCALENE_K2["k_i"][0]) <= 1e-12
    assert max(per_edge, key=per_edge.get) == 0
    assert pants_scalene.gluings[0].a == ("h0", 0)


def test_edge_stretch_agrees_from_both_sides(regular, pants_scalene):
    for s in (pants_scalene, one_holed_torus(regular)):
        for n in range(len(s.gluings)):
            a, b = edge_stretch_pair(s, n, 2.3)
            assert abs(a - b) <= 1e-12


def test_deform_inadmissible_names_hexagon(regular, scalene):
    s = TriangulatedSurface((("big", regular), ("small", scalene)), (), allow_free=True)
    with pytest.raises(DomainError, match="small"):
        deform_surface(s, 0.7)


# ---------------------------------------------------------------- certificates

def test_certificate_trivial(pants_regular):
    c = arc_certificate(pants_regular, 1.7, 1.7)
    assert c.lower_bound == 0.0 and c.upper_bound == 0.0


def test_certificate_regular(pants_regular):
    c = arc_certificate(pants_regular, 1.0, 2.0)
    assert abs(c.lower_bound - REGULAR_K2["log_k"]) <= 1e-12
    assert abs(c.upper_bound - REGULAR_K2["log_k"]) <= 1e-12
    assert c.gap <= 1e-12 and c.geodesic_grade


@pytest.mark.parametrize("K1,K2", [(1, 2), (1, 3), (2, 3)])
def test_certificate_gap(pants_scalene, regular, K1, K2):
    for s in (pants_scalene, one_holed_torus(regular)):
        c = arc_certificate(s, K1, K2)
        assert c.lower_bound <= c.upper_bound + 1e-12
        assert c.gap <= 1e-10


def test_certificate_additivity(pants_scalene):
    c12, c23, c13 = (arc_certificate(pants_scalene, a, b) for a, b in ((1, 2), (2, 3), (1, 3)))
    assert abs(c13.lower_bound - c12.lower_bound - c23.lower_bound) <= 1e-12
    assert c12.arc == c23.arc == c13.arc == 0


def test_certificate_order(pants_regular):
    with pytest.raises(DomainError):
        arc_certificate(pants_regular, 2.0, 1.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 4.0), st.floats(0.0, 3.0))
def test_certificate_gap_property(K1, dK):
    s = doubled(hexagon_from_half_longs((0.7, 1.3, 1.1)))
    c = arc_certificate(s, K1, K1 + dK)
    assert 0 <= c.lower_bound <= c.upper_bound + 1e-12
    assert c.gap <= 1e-10


# ---------------------------------------------------------------- Luo coordinates

def test_luo_regular(pants_regular):
    for n in range(3):
        assert abs(luo_radius(pants_regular, n) - REGULAR["L"]) <= 1e-12
    assert luo_radius(pants_regular, ("h1", 2)) == luo_radius(pants_regular, 2)


def test_luo_scalene(pants_scalene):
    for n in range(3):
        assert abs(luo_radius(pants_scalene, n) - SCALENE["L"][n]) <= 1e-12


def test_luo_boundary_sums(pants_regular, pants_scalene):
    for s in (pants_regular, pants_scalene):
        for c in boundary_cycles(s):
            assert abs(2 * cycle_sum(s, c.crossed) - c.length) <= 1e-10


def test_luo_empty_and_unknown(pants_regular):
    assert cycle_sum(pants_regular, []) == 0.0
    with pytest.raises(DomainError):
        luo_radius(pants_regular, 7)
    with pytest.raises(DomainError):
        luo_radius(pants_regular, ("h9", 0))


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.floats(0.2, 3.0), st.floats(0.2, 3.0), st.floats(0.2, 3.0)),
       st.lists(st.integers(0, 2), max_size=8))
def test_luo_positive_on_type_i(ells, cycle):
    if not realizable(ells):
        return
    h = hexagon_from_half_longs(ells)
    if h.hex_type is not HexType.I:
        return
    s = doubled(h)
    assert all(luo_radius(s, n) > 0 for n in range(3))
    if cycle:
        assert cycle_sum(s, cycle) > 0
    for c in boundary_cycles(s):
        assert abs(2 * cycle_sum(s, c.crossed) - c.length) <= 1e-10
