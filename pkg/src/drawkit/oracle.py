"""Independent brute-force search for crossing-free Hamiltonian paths and
cycles, plus conjecture verification over enumerated drawing classes.

The search shares no logic with the constructive algorithms: it backtracks
over vertex sequences with a bitset of forbidden edges, pruning any partial
path whose newest edge crosses an earlier one.
"""

from __future__ import annotations

from itertools import combinations

from drawkit.errors import TooLarge
from drawkit.rotation import (
    CrossingSet,
    _sorted_pair,
    enumerate_realizable,
    size_cap,
)

ABSENT = None


class _Conflicts:
    """Per-edge bitmask of the edges it crosses, for O(1) conflict checks."""

    def __init__(self, cs: CrossingSet):
        n = cs.n
        self.index = {}
        for i, e in enumerate(combinations(range(1, n + 1), 2)):
            self.index[e] = i
        self.mask = [0] * len(self.index)
        for e, f in cs.pairs:
            self.mask[self.index[e]] |= 1 << self.index[f]
            self.mask[self.index[f]] |= 1 << self.index[e]


def find_cf_ham_path(cs: CrossingSet, a: int, b: int):
    """First crossing-free Hamiltonian a-b path in deterministic search order,
    or None when none exists."""
    cap = size_cap(14)
    if cs.n > cap:
        raise TooLarge(cs.n, cap)
    n = cs.n
    if n == 1:
        return [a]
    conflicts = _Conflicts(cs)
    path = [a]
    visited = {a}
    crossed_stack = [0]

    def rec():
        if len(path) == n:
            return path[-1] == b
        for v in range(1, n + 1):
            if v in visited or (v == b and len(path) != n - 1):
                continue
            idx = conflicts.index[_sorted_pair(path[-1], v)]
            if crossed_stack[-1] >> idx & 1:
                continue
            path.append(v)
            visited.add(v)
            crossed_stack.append(crossed_stack[-1] | conflicts.mask[idx])
            if rec():
                return True
            path.pop()
            visited.remove(v)
            crossed_stack.pop()
        return False

    return list(path) if rec() else ABSENT


def find_cf_ham_cycle(cs: CrossingSet):
    """First crossing-free Hamiltonian cycle (as a vertex list starting at 1,
    the closing edge implied), or None.  Direction symmetry is broken by
    requiring the second vertex to be smaller than the last."""
    cap = size_cap(14)
    if cs.n > cap:
        raise TooLarge(cs.n, cap)
    n = cs.n
    if n < 3:
        raise TooLarge(n, 3)
    conflicts = _Conflicts(cs)
    path = [1]
    visited = {1}
    crossed_stack = [0]

    def rec():
        if len(path) == n:
            if path[1] > path[-1]:
                return False
            idx = conflicts.index[_sorted_pair(path[-1], 1)]
            return not crossed_stack[-1] >> idx & 1
        for v in range(2, n + 1):
            if v in visited:
                continue
            idx = conflicts.index[_sorted_pair(path[-1], v)]
            if crossed_stack[-1] >> idx & 1:
                continue
            path.append(v)
            visited.add(v)
            crossed_stack.append(crossed_stack[-1] | conflicts.mask[idx])
            if rec():
                return True
            path.pop()
            visited.remove(v)
            crossed_stack.pop()
        return False

    return list(path) if rec() else ABSENT


def verify_all_pairs(cs: CrossingSet) -> bool:
    """True iff a crossing-free Hamiltonian path exists between every vertex
    pair."""
    return all(
        find_cf_ham_path(cs, a, b) is not ABSENT
        for a, b in combinations(range(1, cs.n + 1), 2)
    )


def verify_enumeration(n: int, jobs: int = 1) -> dict:
    """Check both conjectures over every enumerated class at size n.

    Since the enumeration filter is only a necessary condition for
    drawability, any failing class is reported as inconclusive (it may simply
    not correspond to a drawing), never as a counterexample.
    """
    classes = 0
    failures = []
    for cs in enumerate_realizable(n, jobs=jobs):
        classes += 1
        cycle_ok = n < 3 or find_cf_ham_cycle(cs) is not ABSENT
        paths_ok = verify_all_pairs(cs)
        if not cycle_ok or not paths_ok:
            failures.append(
                {
                    "class": [list(map(list, pair)) for pair in cs.encode()],
                    "cycle_ok": cycle_ok,
                    "paths_ok": paths_ok,
                    "note": "inconclusive - possibly not drawable",
                }
            )
    failures.sort(key=str)
    return {
        "n": n,
        "classes": classes,
        "conj1_ok": not any(not f["cycle_ok"] for f in failures),
        "conj2_ok": not any(not f["paths_ok"] for f in failures),
        "failures": failures,
    }
