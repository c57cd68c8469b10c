from itertools import combinations

import pytest

from drawkit import cylinder as cyl
from drawkit import generators as gen
from drawkit import rotation as rot
from drawkit import wiring as w
from drawkit.errors import DegeneratePointSet


def binom4(n):
    return n * (n - 1) * (n - 2) * (n - 3) // 24


def test_convex_sizes_match_binomial():
    for n in range(3, 11):
        cs, lw = gen.convex(n)
        assert len(cs) == binom4(n)
        assert w.crossing_set(lw).pairs == cs.pairs


def test_convex_4_single_pair():
    cs, _ = gen.convex(4)
    assert cs.pairs == {((1, 3), (2, 4))}


def test_twisted_sizes_and_pairs():
    assert gen.twisted(4).pairs == {((1, 4), (2, 3))}
    assert gen.twisted(5).pairs == {
        ((1, 4), (2, 3)),
        ((1, 5), (2, 3)),
        ((1, 5), (2, 4)),
        ((1, 5), (3, 4)),
        ((2, 5), (3, 4)),
    }
    for n in range(3, 11):
        assert len(gen.twisted(n)) == binom4(n)


def test_twisted_rotation_matches_rule_up_to_8():
    for n in range(3, 9):
        rs = gen.twisted_rotation(n)
        assert rot.crossings_from_rotation(rs).pairs == gen.twisted(n).pairs


def test_point_set_invariants():
    with pytest.raises(DegeneratePointSet):
        gen.PointSet(((0, 0), (1, 1), (2, 2)))
    with pytest.raises(DegeneratePointSet):
        gen.PointSet(((0, 0), (0, 1), (2, 5)))


def test_from_points_parabola_and_triangle():
    _, cs = gen.from_points(gen.PointSet(((1, 1), (2, 4), (3, 9), (4, 16))))
    assert cs.pairs == {((1, 3), (2, 4))}
    _, cs2 = gen.from_points(gen.PointSet(((0, 0), (3, 7), (4, 3), (6, 1))))
    assert cs2.pairs == frozenset()


def test_from_points_parabola_5_is_the_convex_class():
    _, cs = gen.from_points(gen.PointSet(tuple((i, i * i) for i in range(1, 6))))
    assert len(cs) == 5
    assert (
        rot.canonical_crossing_form(cs).encode()
        == rot.canonical_crossing_form(gen.convex(5)[0]).encode()
    )


def test_two_page_one_page_degenerates_to_convex_rule():
    cs, _ = gen.two_page(4, {e: 0 for e in combinations(range(1, 5), 2)})
    assert cs.pairs == {((1, 3), (2, 4))}


def test_two_page_separating_the_linked_pair():
    pages = {e: 0 for e in combinations(range(1, 5), 2)}
    pages[(2, 4)] = 1
    cs, lw = gen.two_page(4, pages)
    assert cs.pairs == frozenset()
    assert w.crossing_set(lw).pairs == frozenset()


def test_two_page_k8_fixture_has_uncrossed_spine_cycle():
    cs, lw = gen.two_page_crossing_minimal_k8()
    crossed = {e for pair in cs.pairs for e in pair}
    spine = [(i, i + 1) for i in range(1, 8)] + [(1, 8)]
    assert all(e not in crossed for e in spine)
    assert len(cs) == 18  # the known minimum for a book drawing on 8 vertices
    assert w.crossing_set(lw).pairs == cs.pairs


def test_hill_is_strongly_cylindrical():
    for n in (3, 5, 8, 9):
        assert cyl.is_strongly_cylindrical(gen.hill(n))


def test_hill_crossing_counts_match_the_geodesic_values():
    def zvalue(n):
        return (n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2) // 4

    for n in range(3, 10):
        assert len(cyl.crossing_set(gen.hill(n))) == zvalue(n)


def test_hill5_is_one_of_the_five_classes():
    cs = cyl.crossing_set(gen.hill(5))
    assert rot.canonical_crossing_form(cs).encode() in rot.k5_reference_forms()


def test_hill5_matches_the_three_two_point_configuration():
    cs = cyl.crossing_set(gen.hill(5))
    # three hull points with two interior points: the unique 1-crossing class
    ps = gen.PointSet(((0, 0), (2, 3), (3, 1), (5, 9), (10, 2)))
    _, cs2 = gen.from_points(ps)
    assert len(cs2) == 1
    assert (
        rot.canonical_crossing_form(cs).encode()
        == rot.canonical_crossing_form(cs2).encode()
    )


def test_four_plus_one_configuration_is_a_third_class():
    ps = gen.PointSet(((0, 0), (4, 0 + 1), (5, 6), (1, 5), (3, 3)))
    _, cs = gen.from_points(ps)
    assert len(cs) == 3
    assert rot.canonical_crossing_form(cs).encode() in rot.k5_reference_forms()


def test_generator_classes_cover_four_of_the_five():
    forms = {
        rot.canonical_crossing_form(gen.convex(5)[0]).encode(),
        rot.canonical_crossing_form(gen.twisted(5)).encode(),
        rot.canonical_crossing_form(cyl.crossing_set(gen.hill(5))).encode(),
        rot.canonical_crossing_form(
            gen.from_points(gen.PointSet(((0, 0), (4, 1), (5, 6), (1, 5), (3, 3))))[1]
        ).encode(),
    }
    assert len(forms) == 4
    assert forms <= rot.k5_reference_forms()


def test_random_cylindrical_deterministic_and_valid():
    a = gen.random_cylindrical(6, 1, strong=True)
    b = gen.random_cylindrical(6, 1, strong=True)
    assert a == b
    assert cyl.is_strongly_cylindrical(a)
    cs = cyl.crossing_set(a)
    quads = set()
    for e, f in cs.pairs:
        q = frozenset(e) | frozenset(f)
        assert q not in quads
        quads.add(q)


def test_random_x_monotone_deterministic():
    a = gen.random_x_monotone(6, 9)
    b = gen.random_x_monotone(6, 9)
    assert a == b


def test_random_x_monotone_small_instances_have_at_most_one_crossing():
    for seed in range(6):
        lw = gen.random_x_monotone(4, seed)
        assert len(w.crossing_set(lw)) <= 1


def test_random_x_monotone_extreme_edges_uncrossed():
    for seed in range(10):
        n = 5 + seed % 4
        lw = gen.random_x_monotone(n, seed)
        crossed = {e for pair in w.crossing_set(lw).pairs for e in pair}
        assert (1, 2) not in crossed
        assert (n - 1, n) not in crossed
