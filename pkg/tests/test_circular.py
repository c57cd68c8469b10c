import random
from fractions import Fraction

import pytest

from drawkit import circular as circ
from drawkit import cylinder as cyl
from drawkit import generators as gen
from drawkit import wiring as w
from drawkit.circular import (
    Arc,
    CircularWiring,
    SwapEvent,
    VertexEvent,
    arcs_cover_circle,
)
from drawkit.errors import CutBlocked, SubsetTooSmall

F = Fraction


def short_way_triangle():
    """K_3 with all edges on their short arcs (origin outside the triangle)."""
    return CircularWiring(
        3,
        (F(1, 10), F(3, 10), F(6, 10)),
        (),
        (
            VertexEvent(F(1, 10), 1, (), ((1, 2), (1, 3)), 0),
            VertexEvent(F(3, 10), 2, ((1, 2),), ((2, 3),), 0),
            VertexEvent(F(6, 10), 3, ((2, 3), (1, 3)), (), 0),
        ),
    )


def long_way_triangle():
    """K_3 where edge {1,2} takes the long way around the origin."""
    return CircularWiring(
        3,
        (F(1, 10), F(3, 10), F(6, 10)),
        ((1, 2),),
        (
            VertexEvent(F(1, 10), 1, ((1, 2),), ((1, 3),), 0),
            VertexEvent(F(3, 10), 2, (), ((1, 2), (2, 3)), 0),
            VertexEvent(F(6, 10), 3, ((2, 3), (1, 3)), (), 1),
        ),
    )


def covering_k4():
    """K_4 whose edges {1,2} and {3,4} have wedges of length >= 1/2 that
    together cover the circle; one crossing."""
    return CircularWiring(
        4,
        (F(10, 100), F(60, 100), F(15, 100), F(55, 100)),
        ((3, 4),),
        (
            VertexEvent(F(10, 100), 1, (), ((1, 3), (1, 4), (1, 2)), 1),
            VertexEvent(F(15, 100), 3, ((3, 4), (1, 3)), ((2, 3),), 0),
            VertexEvent(F(55, 100), 4, ((1, 4),), ((2, 4), (3, 4)), 1),
            SwapEvent(F(575, 1000), 2),
            VertexEvent(F(60, 100), 2, ((2, 3), (2, 4), (1, 2)), (), 0),
        ),
    )


def test_wedges_short_and_long_way():
    cw = short_way_triangle()
    assert circ.wedge(cw, (1, 2)) == Arc(F(1, 10), F(2, 10))
    cw2 = long_way_triangle()
    assert circ.wedge(cw2, (1, 2)) == Arc(F(3, 10), F(8, 10))
    for cw in (short_way_triangle(), long_way_triangle()):
        for e in cw.edges():
            assert circ.wedge(cw, e).length < 1


def test_crossing_sets_of_triangles_are_empty():
    assert circ.crossing_set(short_way_triangle()).pairs == frozenset()
    assert circ.crossing_set(long_way_triangle()).pairs == frozenset()


def test_strongly_c_monotone_checks():
    assert circ.is_strongly_c_monotone(short_way_triangle())
    assert not circ.is_strongly_c_monotone(covering_k4())


def test_covering_k4_has_one_crossing():
    assert circ.crossing_set(covering_k4()).pairs == {((1, 2), (3, 4))}


def test_arcs_cover_circle_boundary_touching():
    assert arcs_cover_circle((Arc(0, F(1, 2)), Arc(F(1, 2), F(1, 2))))
    assert not arcs_cover_circle((Arc(0, F(1, 2)), Arc(F(51, 100), F(49, 100))))


def test_conversion_is_strongly_c_monotone_for_points_far_below():
    for seed in range(6):
        lw = gen.random_x_monotone(5 + seed % 3, seed)
        cw = circ.linear_to_circular(lw)
        assert circ.is_strongly_c_monotone(cw)


def test_gap_edges_of_hill6_conversion():
    cw = cyl.to_strongly_c_monotone(gen.hill(6))
    flags = circ.gap_edges(cw)
    assert len(flags) == 6
    assert all(inside for _, inside in flags)


def test_gap_edges_form_crossing_free_cycle_when_inside():
    cw = cyl.to_strongly_c_monotone(gen.hill(8))
    flags = circ.gap_edges(cw)
    assert all(inside for _, inside in flags)
    # the cycle is crossing-free: no two gap edges cross each other
    cs = circ.crossing_set(cw)
    gap = [e for e, _ in flags]
    for i in range(len(gap)):
        for j in range(i + 1, len(gap)):
            assert (gap[i], gap[j]) not in cs
    ring = circ.circular_vertex_order(cw)
    assert sorted(gap) == sorted(
        tuple(sorted((ring[i], ring[(i + 1) % len(ring)]))) for i in range(len(ring))
    )


def test_cut_recovers_x_monotone_wiring():
    for seed in range(8):
        n = 4 + seed % 5
        lw = gen.random_x_monotone(n, seed)
        cw = circ.linear_to_circular(lw)
        back = circ.cut_to_linear(cw, F(3, 4))
        assert w.crossing_set(back).pairs == w.crossing_set(lw).pairs
        assert back.n == lw.n


def test_cut_blocked_inside_a_wedge():
    cw = short_way_triangle()
    with pytest.raises(CutBlocked):
        circ.cut_to_linear(cw, F(2, 10))  # inside the wedge of {1,2}
    lw = circ.cut_to_linear(cw, F(8, 10))
    assert w.crossing_set(lw).pairs == frozenset()


def test_cut_through_empty_gap_succeeds():
    cw = cyl.to_strongly_c_monotone(gen.hill(6))
    # find an angle in a gap not covered by any wedge, if one exists
    flags = circ.gap_edges(cw)
    ring = circ.circular_vertex_order(cw)
    for i, (e, inside) in enumerate(flags):
        u, v = ring[i], ring[(i + 1) % len(ring)]
        mid = circ.frac1(
            cw.angles[u - 1]
            + circ.frac1(cw.angles[v - 1] - cw.angles[u - 1]) / 2
        )
        try:
            lw = circ.cut_to_linear(cw, mid)
        except CutBlocked:
            continue
        assert w.crossing_set(lw).pairs == circ.crossing_set(cw).pairs
        return
    pytest.skip("every gap is covered by a wedge in this drawing")


def test_induce_identity_and_properties():
    cw = covering_k4()
    same = circ.induce(cw, [1, 2, 3, 4])
    assert circ.crossing_set(same).pairs == circ.crossing_set(cw).pairs
    sub = circ.induce(cw, [1, 2, 3])
    assert circ.crossing_set(sub).pairs == frozenset()
    with pytest.raises(SubsetTooSmall):
        circ.induce(cw, [2])


def test_induce_commutes_with_crossing_restriction():
    rng = random.Random(9)
    for seed in range(6):
        cd = gen.random_cylindrical(7, seed, strong=True)
        cw = cyl.to_circular_wiring(cyl.normalize_winding(cd))
        cs = circ.crossing_set(cw)
        subset = sorted(rng.sample(range(1, 8), 5))
        relabel = {v: i + 1 for i, v in enumerate(subset)}
        sub = circ.induce(cw, subset)
        expected = set()
        for e, f in cs.pairs:
            if all(x in relabel for g in (e, f) for x in g):
                e2 = tuple(sorted((relabel[e[0]], relabel[e[1]])))
                f2 = tuple(sorted((relabel[f[0]], relabel[f[1]])))
                expected.add(tuple(sorted((e2, f2))))
        assert circ.crossing_set(sub).pairs == frozenset(expected)


def test_composition_invariant_enforced():
    # an event list that does not return to the base order must be rejected
    with pytest.raises(Exception):
        CircularWiring(
            3,
            (F(1, 10), F(3, 10), F(6, 10)),
            ((1, 2),),
            (
                VertexEvent(F(1, 10), 1, (), ((1, 2), (1, 3)), 0),
                VertexEvent(F(3, 10), 2, ((1, 2),), ((2, 3),), 0),
                VertexEvent(F(6, 10), 3, ((2, 3), (1, 3)), (), 0),
            ),
        )
