from itertools import combinations

import pytest

from drawkit import generators as gen
from drawkit import hampath as hp
from drawkit import oracle
from drawkit import rotation as rot
from drawkit.errors import TooLarge
from drawkit.rotation import CrossingSet


def test_find_path_examples():
    c4, _ = gen.convex(4)
    assert oracle.find_cf_ham_path(c4, 1, 3) == [1, 2, 4, 3]
    t4 = gen.twisted(4)
    assert oracle.find_cf_ham_path(t4, 2, 3) == [2, 1, 4, 3]
    cs2 = CrossingSet(2, frozenset())
    assert oracle.find_cf_ham_path(cs2, 1, 2) == [1, 2]


def test_find_cycle_examples():
    c5, _ = gen.convex(5)
    assert oracle.find_cf_ham_cycle(c5) == [1, 2, 3, 4, 5]
    t5 = gen.twisted(5)
    cycle = oracle.find_cf_ham_cycle(t5)
    assert cycle is not None and hp.is_crossing_free(t5, cycle + [cycle[0]])
    c3 = CrossingSet(3, frozenset())
    assert oracle.find_cf_ham_cycle(c3) == [1, 2, 3]


def test_returned_paths_are_crossing_free():
    for seed in range(8):
        cd = gen.random_cylindrical(6, seed, strong=False)
        from drawkit import cylinder as cyl

        cs = cyl.crossing_set(cd)
        for a, b in combinations(range(1, 7), 2):
            p = oracle.find_cf_ham_path(cs, a, b)
            assert p is not None
            assert hp.is_crossing_free(cs, p)
            assert p[0] == a and p[-1] == b and sorted(p) == list(range(1, 7))


def test_verify_all_pairs():
    assert oracle.verify_all_pairs(gen.convex(6)[0])
    assert oracle.verify_all_pairs(CrossingSet(2, frozenset()))
    for cs in rot.enumerate_realizable(5):
        assert oracle.verify_all_pairs(cs)


def test_an_absent_instance_is_reported():
    # a hand-frozen crossing set (valid per the type, not drawable) where no
    # crossing-free Hamiltonian path from 3 to 4 exists
    pairs = frozenset(
        {
            ((1, 2), (3, 6)), ((1, 3), (2, 4)), ((1, 3), (4, 5)), ((1, 4), (2, 5)),
            ((1, 5), (2, 6)), ((1, 6), (2, 4)), ((1, 6), (3, 4)), ((1, 6), (4, 5)),
            ((2, 3), (4, 5)), ((2, 3), (4, 6)), ((2, 5), (4, 6)), ((2, 6), (3, 5)),
        }
    )
    cs = CrossingSet(6, pairs)
    assert oracle.find_cf_ham_path(cs, 3, 4) is None
    assert not oracle.verify_all_pairs(cs)


def test_size_cap():
    with pytest.raises(TooLarge):
        oracle.find_cf_ham_path(CrossingSet(15, frozenset()), 1, 2)


def test_determinism():
    t6 = gen.twisted(6)
    assert oracle.find_cf_ham_path(t6, 2, 5) == oracle.find_cf_ham_path(t6, 2, 5)
    assert oracle.find_cf_ham_cycle(t6) == oracle.find_cf_ham_cycle(t6)


def test_verify_enumeration_n4_and_n5():
    r4 = oracle.verify_enumeration(4)
    assert r4["classes"] == 2 and r4["conj1_ok"] and r4["conj2_ok"] and not r4["failures"]
    r5 = oracle.verify_enumeration(5)
    assert r5["classes"] == 5 and r5["conj1_ok"] and r5["conj2_ok"]


def test_cycle_minus_any_edge_is_a_crossing_free_path():
    for n in (4, 5):
        for cs in rot.enumerate_realizable(n):
            cycle = oracle.find_cf_ham_cycle(cs)
            assert cycle is not None
            closed = cycle + [cycle[0]]
            for k in range(n):
                path = closed[k + 1 :] + closed[1 : k + 1]
                assert hp.is_crossing_free(cs, path)
