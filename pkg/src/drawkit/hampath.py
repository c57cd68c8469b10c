"""Constructive crossing-free Hamiltonian paths with prescribed end-vertices.

Each drawing class gets the constructive procedure its structure supports:
x-monotone wirings recurse on the sides of the edge {v_1, v_n}; strongly
c-monotone wirings either cut to an x-monotone wiring or combine an inner
x-monotone piece with a walk along gap edges; cylindrical drawings stitch rim
walks with lateral edges; twisted drawings search short-span paths first.
Every construction validates its own output and raises InternalAssertion on
failure, so a transcription bug can never return silently.
"""

from __future__ import annotations

from itertools import combinations

from drawkit import circular as circ
from drawkit import cylinder as cyl
from drawkit import wiring as w
from drawkit.circular import CircularWiring, frac1
from drawkit.cylinder import CylindricalDrawing, Face
from drawkit.errors import (
    BadRotation,
    EdgeIsCrossed,
    InternalAssertion,
    NotStronglyCMonotone,
)
from drawkit.rotation import CrossingSet, _norm_crossing, _sorted_pair, nested_rule_pairs
from drawkit.wiring import LinearWiring

VertexPath = list  # ordered sequence of distinct vertices


def is_crossing_free(cs: CrossingSet, path) -> bool:
    """True iff no two edges of the path cross in cs."""
    edges = [_sorted_pair(path[i], path[i + 1]) for i in range(len(path) - 1)]
    return not any((e, f) in cs for e, f in combinations(edges, 2))


def _check_path(cs: CrossingSet, path, a: int, b: int, n: int):
    if sorted(path) != list(range(1, n + 1)):
        raise InternalAssertion(f"path is not Hamiltonian: {path}")
    if path[0] != a or path[-1] != b:
        raise InternalAssertion(f"path has wrong end-vertices: {path}")
    if not is_crossing_free(cs, path):
        raise InternalAssertion(f"path has a crossing: {path}")


# ============================================================
# X-monotone drawings
# ============================================================

def _solve_on(lw: LinearWiring, subset, x: int, y: int):
    """Recurse on the induced sub-wiring; arguments and result in original labels."""
    subset = sorted(subset)
    if len(subset) == 1:
        return [x]
    back = {i + 1: v for i, v in enumerate(subset)}
    fwd = {v: i + 1 for i, v in enumerate(subset)}
    sub = w.induce(lw, subset)
    return [back[v] for v in _xmono_rec(sub, fwd[x], fwd[y])]


def _xmono_rec(lw: LinearWiring, a: int, b: int):
    n = lw.n
    if n <= 2:
        return [a, b][:n]
    if {a, b} == {1, n}:
        path = list(range(1, n + 1))
        return path if a == 1 else path[::-1]
    if n == 3:
        mid = ({1, 2, 3} - {a, b}).pop()
        return [a, mid, b]
    sides = w.vertex_sides(lw, (1, n))

    if a not in (1, n) and b not in (1, n) and sides[a] != sides[b]:
        # end-vertices on different sides of {v_1, v_n}: split, join by that edge
        sa = {v for v, s in sides.items() if s == sides[a]}
        sb = {v for v, s in sides.items() if s == sides[b]}
        p1 = _solve_on(lw, {1} | sa, a, 1)
        p2 = _solve_on(lw, {n} | sb, n, b)
        return p1 + p2

    # same side (an end at v_1 or v_n counts as either side)
    if a in (1, n) or b in (1, n):
        p, q = (a, b) if b in (1, n) else (b, a)
        main = sides[p]
        rightward = q == n
    else:
        p, q = (a, b) if a < b else (b, a)
        main = sides[p]
        rightward = True
    group = {v for v, s in sides.items() if s == main}
    other = {v for v, s in sides.items() if s != main}
    if rightward:
        p1 = _solve_on(lw, {1} | {v for v in group if v < q}, p, 1)
        p2 = _solve_on(lw, {1, n} | other, 1, n)
        p3 = _solve_on(lw, {n} | {v for v in group if v >= q}, n, q)
    else:
        p1 = _solve_on(lw, {n} | {v for v in group if v > q}, p, n)
        p2 = _solve_on(lw, {1, n} | other, n, 1)
        p3 = _solve_on(lw, {1} | {v for v in group if v <= q}, 1, q)
    path = p1 + p2[1:] + p3[1:]
    return path if path[0] == a else path[::-1]


def path_x_monotone(lw: LinearWiring, a: int, b: int):
    """Crossing-free Hamiltonian path from a to b in an x-monotone wiring of
    the complete graph."""
    if not (1 <= a <= lw.n and 1 <= b <= lw.n) or a == b:
        raise InternalAssertion(f"bad end-vertices {a}, {b}")
    path = _xmono_rec(lw, a, b)
    _check_path(w.crossing_set(lw), path, a, b, lw.n)
    return path


# ============================================================
# Strongly c-monotone drawings
# ============================================================

def _cut_then_solve(cw: CircularWiring, cut_angle, a: int, b: int):
    lw = circ.cut_to_linear(cw, cut_angle)
    ring = sorted(range(1, cw.n + 1), key=lambda v: frac1(cw.angles[v - 1] - cut_angle))
    fwd = {v: i + 1 for i, v in enumerate(ring)}
    return [ring[i - 1] for i in _xmono_rec(lw, fwd[a], fwd[b])]


def path_strong_c_mon(cw: CircularWiring, a: int, b: int):
    """Crossing-free Hamiltonian path from a to b in a strongly c-monotone
    circular wiring of the complete graph."""
    if not circ.is_strongly_c_monotone(cw):
        raise NotStronglyCMonotone("input wiring fails the star cover check")
    cs = circ.crossing_set(cw)
    n = cw.n
    if n == 2:
        return [a, b]

    ring = circ.circular_vertex_order(cw)
    idx = {v: i for i, v in enumerate(ring)}
    flags = circ.gap_edges(cw)
    escaped = [e for e, inside in flags if not inside]
    if escaped:
        # some gap edge spans the rest of the circle: the whole drawing lives
        # in its wedge and unrolls to an x-monotone drawing through its gap
        gap_start = next(
            i for i, u in enumerate(ring)
            if _sorted_pair(u, ring[(i + 1) % n]) == escaped[0]
        )
        u0, u1 = ring[gap_start], ring[(gap_start + 1) % n]
        cut = frac1(cw.angles[u0 - 1] + frac1(cw.angles[u1 - 1] - cw.angles[u0 - 1]) / 2)
        path = _cut_then_solve(cw, cut, a, b)
        _check_path(cs, path, a, b, n)
        return path

    if (idx[a] - idx[b]) % n in (1, n - 1):
        # circular neighbors: take the gap-edge path the long way around
        step = 1 if (idx[a] + 1) % n == idx[b] else -1
        path = [ring[(idx[a] - step * k) % n] for k in range(n)]
        _check_path(cs, path, a, b, n)
        return path

    swapped = False
    for _ in range(2):
        a_next = ring[(idx[a] + 1) % n]
        b_next = ring[(idx[b] + 1) % n]
        wedge = circ.wedge(cw, _sorted_pair(a_next, b_next))
        if wedge.contains(cw.angles[a - 1]):
            break
        a, b = b, a
        swapped = True
    else:
        raise InternalAssertion("wedge of the predecessor edge contains neither end")

    inside = [v for v in ring if wedge.contains(cw.angles[v - 1])]
    sub = sorted(inside)
    fwd = {v: i + 1 for i, v in enumerate(sub)}
    back = {i + 1: v for i, v in enumerate(sub)}
    sub_cw = circ.induce(cw, sub)
    comp_start = wedge.end
    after = min(
        (frac1(cw.angles[v - 1] - comp_start) for v in ring if not wedge.contains(cw.angles[v - 1])),
        default=frac1(1 - wedge.length) / 2,
    )
    cut = frac1(comp_start + after / 2)
    inner = _cut_then_solve(sub_cw, cut, fwd[a], fwd[a_next])
    path = [back[v] for v in inner]
    k = (idx[a_next] + 1) % n
    while ring[(k - 1) % n] != b:
        path.append(ring[k])
        k = (k + 1) % n
    if swapped:
        path = path[::-1]
        a, b = b, a
    _check_path(cs, path, a, b, n)
    return path


# ============================================================
# Cylindrical drawings
# ============================================================

def _rim_walk(cd: CylindricalDrawing, which: str, start: int, crossed_rims: set):
    """Clockwise rim walk from `start`, detouring around a crossed rim edge."""
    ring_cw = list(reversed(cd.ring(which)))
    k = ring_cw.index(start)
    c = ring_cw[k:] + ring_cw[:k]
    p = len(c)
    if p == 1:
        return [start]
    path = [c[0]]
    for j in range(p - 1):
        e = _sorted_pair(c[j], c[j + 1])
        if e in crossed_rims:
            # take the chord to the last vertex and come back counter-clockwise
            path.extend(c[p - 1 : j : -1])
            return path
        path.append(c[j + 1])
    return path


def path_cylindrical(cd: CylindricalDrawing, a: int, b: int):
    """Crossing-free Hamiltonian path from a to b in a cylindrical drawing of
    the complete graph."""
    cs = cyl.crossing_set(cd)
    n = cd.n
    uncrossed = cyl.uncrossed_rim_edges(cd)
    crossed_rims = {
        which: set(cyl.rim_edges(cd)[which]) - uncrossed[which] for which in ("outer", "inner")
    }

    if not cd.inner or not cd.outer:
        path = _one_circle_path(cd, a, b)
        _check_path(cs, path, a, b, n)
        return path

    ca, cb = cd.circle_of(a), cd.circle_of(b)
    if ca != cb:
        p1 = _rim_walk(cd, ca, a, crossed_rims[ca])
        p2 = _rim_walk(cd, cb, b, crossed_rims[cb])
        path = p1 + p2[::-1]
        _check_path(cs, path, a, b, n)
        return path

    path = _same_circle_path(cd, a, b, cs, crossed_rims)
    _check_path(cs, path, a, b, n)
    return path


def _one_circle_path(cd: CylindricalDrawing, a: int, b: int):
    """All vertices on one circle: the drawing is a 2-page book drawing."""
    from drawkit.generators import two_page
    from drawkit.rotation import relabel_crossing_set

    which = "outer" if cd.outer else "inner"
    spine = cd.ring(which)
    pages = {ce.edge: (0 if ce.face is Face.HOME else 1) for ce in cd.circle}
    cs2, lw = two_page(cd.n, pages, spine_order=spine)
    pos = {v: i + 1 for i, v in enumerate(spine)}
    if cs2.pairs != relabel_crossing_set(cyl.crossing_set(cd), pos).pairs:
        raise InternalAssertion("one-circle drawing is not its own 2-page model")
    inner = _xmono_rec(lw, pos[a], pos[b])
    return [spine[i - 1] for i in inner]


def _same_circle_path(cd: CylindricalDrawing, a, b, cs, crossed_rims):
    which = cd.circle_of(a)
    other = "inner" if which == "outer" else "outer"

    # rim path across the whole other circle, skipping its crossed rim edge
    ring2 = cd.ring(other)
    if len(ring2) == 1:
        p2 = [ring2[0]]
    else:
        rims2 = cyl.rim_edges(cd)[other]
        skip = sorted(crossed_rims[other])[0] if crossed_rims[other] else rims2[-1]
        i2 = next(i for i in range(len(ring2))
                  if _sorted_pair(ring2[i], ring2[(i + 1) % len(ring2)]) == skip)
        p2 = [ring2[(i2 + 1 + k) % len(ring2)] for k in range(len(ring2))]

    reversed_out = False
    for _ in range(2):
        ring_cw = list(reversed(cd.ring(which)))
        k = ring_cw.index(a)
        c = ring_cw[k:] + ring_cw[:k]
        p = len(c)
        t = c.index(b)
        f1 = None
        for s in range(p - 1):
            if _sorted_pair(c[s], c[s + 1]) in crossed_rims[which]:
                f1 = s
                break
        wrap_crossed = _sorted_pair(c[p - 1], c[0]) in crossed_rims[which]
        if f1 is not None and f1 >= t or wrap_crossed:
            a, b = b, a
            reversed_out = True
            continue
        break
    else:
        raise InternalAssertion("crossed rim edge cannot be oriented between the ends")

    if f1 is None:
        p1 = c[:t]
        p3 = c[t:]
        e1 = None
    elif t == f1 + 1:
        p1 = c[: f1 + 1]
        p3 = c[t:]
        e1 = None
    else:
        p1 = c[: f1 + 1]
        p3 = c[t:] + c[t - 1 : f1 : -1]
        e1 = _sorted_pair(c[p - 1], c[t - 1])

    u1 = p1[-1]
    u3 = p3[-1]
    # two ways to stitch the rim pieces through the other circle; at least one
    # pair of lateral edges is non-crossing, ties go to the smaller pair
    valid = []
    for mid in (p2, p2[::-1]):
        e = _sorted_pair(u1, mid[0])
        e2 = _sorted_pair(mid[-1], u3)
        if set(e) & set(e2) or _norm_crossing(e, e2) not in cs.pairs:
            valid.append((tuple(sorted((e, e2))), p1 + mid + p3[::-1]))
    if not valid:
        raise InternalAssertion("both lateral stitch choices cross")
    valid.sort()
    path = valid[0][1]
    return path[::-1] if reversed_out else path


# ============================================================
# Twisted drawings
# ============================================================

def _search_path(n, a, b, allowed_edge, conflict_pairs):
    """Deterministic DFS for a Hamiltonian a-b path; neighbors ascending."""
    cs_pairs = conflict_pairs

    def edges_conflict(e, used):
        return any(_norm_crossing(e, f) in cs_pairs for f in used)

    path = [a]
    used_edges: list = []
    visited = {a}

    def rec():
        if len(path) == n:
            return path[-1] == b
        for v in range(1, n + 1):
            if v in visited or (v == b and len(path) != n - 1):
                continue
            e = _sorted_pair(path[-1], v)
            if not allowed_edge(e) or edges_conflict(e, used_edges):
                continue
            path.append(v)
            visited.add(v)
            used_edges.append(e)
            if rec():
                return True
            path.pop()
            visited.remove(v)
            used_edges.pop()
        return False

    return list(path) if rec() else None


def path_twisted(n: int, a: int, b: int):
    """Crossing-free Hamiltonian path from a to b in the twisted drawing.

    Paths over edges of index distance at most two can never use the outer
    edge of a nested pair, so they are crossing-free outright; when no such
    path exists for the given ends, a validated backtracking fallback over
    arbitrary non-nested edge sets takes over.
    """
    if n < 2 or a == b:
        raise InternalAssertion(f"bad arguments n={n}, ends {a},{b}")
    if n == 2:
        return [a, b]
    nested = nested_rule_pairs(n)
    path = _search_path(n, a, b, lambda e: e[1] - e[0] <= 2, frozenset())
    if path is None:
        path = _search_path(n, a, b, lambda e: True, nested)
    if path is None:
        raise InternalAssertion(f"no crossing-free path found in T_{n} for ({a}, {b})")
    _check_path(CrossingSet(n, nested), path, a, b, n)
    return path


# ============================================================
# Cycles and the apex duplication
# ============================================================

def cycle_via_uncrossed(cs: CrossingSet, uncrossed, path_fn):
    """Close a crossing-free Hamiltonian path over a completely uncrossed edge
    into a crossing-free Hamiltonian cycle.

    Returns the cycle as a vertex list without repeating the first vertex.
    """
    e = _sorted_pair(*uncrossed)
    if any(e in pair for pair in cs.pairs):
        raise EdgeIsCrossed(f"edge {e} has crossings")
    a, b = e
    path = path_fn(a, b)
    _check_path(cs, path, a, b, cs.n)
    closed = path + [path[0]]
    for i, j in combinations(range(len(closed) - 1), 2):
        e1 = _sorted_pair(closed[i], closed[i + 1])
        e2 = _sorted_pair(closed[j], closed[j + 1])
        if (e1, e2) in cs:
            raise InternalAssertion("closing edge introduced a crossing")
    return path


def duplicate_apex(cs: CrossingSet, rotation_of_vn) -> CrossingSet:
    """Duplicate the last vertex next to itself.

    rotation_of_vn lists v_1..v_{n-1} in clockwise order around v_n; vertices
    are relabeled so that this rotation is the identity, then the new vertex
    v_{n+1} is inserted so that the edge {v_{n+1}, v_i} crosses all edges
    {v_n, v_j} with i < j < n plus everything {v_n, v_i} crosses, and
    {v_n, v_{n+1}} is completely uncrossed.  The result is returned in the
    relabeled frame.
    """
    n = cs.n
    rotation = list(rotation_of_vn)
    if sorted(rotation) != list(range(1, n)):
        raise BadRotation(f"rotation must list 1..{n - 1}")
    perm = {v: i + 1 for i, v in enumerate(rotation)}
    perm[n] = n
    from drawkit.rotation import relabel_crossing_set

    base = relabel_crossing_set(cs, perm)
    pairs = set(base.pairs)
    for i in range(1, n):
        new_edge = _sorted_pair(i, n + 1)
        for j in range(i + 1, n):
            pairs.add(_norm_crossing(new_edge, _sorted_pair(j, n)))
        for e, f in base.pairs:
            spoke = _sorted_pair(i, n)
            other = f if e == spoke else e if f == spoke else None
            if other is not None:
                pairs.add(_norm_crossing(new_edge, other))
    return CrossingSet(n + 1, frozenset(pairs))
