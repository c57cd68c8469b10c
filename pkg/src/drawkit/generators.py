"""Generators for the named drawings and for seeded random test instances.

Everything is exact: point coordinates, arc heights, and crossing positions
are rationals, so every incidence decision is a comparison, never a guess.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from drawkit import _geom
from drawkit.circular import frac1
from drawkit.cylinder import (
    ArcDir,
    CircleEdge,
    CylindricalDrawing,
    Face,
    LateralEdge,
    crossing_set as cyl_crossing_set,
)
from drawkit.errors import DegeneratePointSet, GaveUp, InternalAssertion, InvalidDrawing
from drawkit.rotation import (
    CrossingSet,
    RotationSystem,
    _norm_crossing,
    _sorted_pair,
    crossings_from_rotation,
    linked_rule_pairs,
    nested_rule_pairs,
)
from drawkit.wiring import LinearWiring, crossing_set as wiring_crossing_set

Edge = tuple[int, int]


@dataclass(frozen=True)
class PointSet:
    """Exact rational points in general position with distinct x-coordinates."""

    points: tuple

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        xs = [p[0] for p in pts]
        if len(set(xs)) != len(xs):
            raise DegeneratePointSet("two points share an x-coordinate")
        for a, b, c in combinations(pts, 3):
            if _geom.orient(a, b, c) == 0:
                raise DegeneratePointSet(f"collinear points {a}, {b}, {c}")

    def __len__(self):
        return len(self.points)


def from_points(ps: PointSet):
    """Rotation system and crossing set of the straight-line drawing.

    Vertex i is the i-th point; the two outputs are checked against each
    other through the rotation-to-crossing table.
    """
    pts = {i + 1: p for i, p in enumerate(ps.points)}
    n = len(pts)
    if n < 3:
        raise DegeneratePointSet("need at least 3 points")
    rotations = []
    for v in sorted(pts):
        others = [(u, pts[u]) for u in sorted(pts) if u != v]
        rotations.append(tuple(_geom.clockwise_order(pts[v], others)))
    rs = RotationSystem(n, tuple(rotations))
    pairs = set()
    for e, f in combinations(combinations(range(1, n + 1), 2), 2):
        if set(e) & set(f):
            continue
        if _geom.segments_cross(pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]]):
            pairs.add(_norm_crossing(e, f))
    cs = CrossingSet(n, frozenset(pairs))
    if crossings_from_rotation(rs).pairs != cs.pairs:
        raise InternalAssertion("rotation-derived crossings disagree with the segments")
    return rs, cs


# ============================================================
# Wiring construction from exact one-crossing curve models
# ============================================================

class _SegCurve:
    """Line segment between two points (for straight-line drawings)."""

    def __init__(self, p, q):
        if p[0] > q[0]:
            p, q = q, p
        self.p, self.q = p, q

    def y_at(self, x: Fraction) -> Fraction:
        p, q = self.p, self.q
        return p[1] + (q[1] - p[1]) * (x - p[0]) / (q[0] - p[0])

    def crossings_with(self, other) -> list:
        if not _geom.segments_cross(self.p, self.q, other.p, other.q):
            return []
        s1 = (self.q[1] - self.p[1]) / (self.q[0] - self.p[0])
        s2 = (other.q[1] - other.p[1]) / (other.q[0] - other.p[0])
        x = (other.p[1] - other.p[0] * s2 - self.p[1] + self.p[0] * s1) / (s1 - s2)
        return [x]


class _ArcCurve:
    """Parabolic page arc over spine interval [a, b]: y = sign * (x-a)(b-x).

    Two same-page arcs differ by a linear function, so they cross at most
    once, exactly when their intervals are linked; opposite pages never meet.
    """

    def __init__(self, a, b, page):
        self.a, self.b = Fraction(a), Fraction(b)
        self.page = page
        self.sign = 1 if page == 0 else -1

    def y_at(self, x: Fraction) -> Fraction:
        return self.sign * (x - self.a) * (self.b - x)

    def crossings_with(self, other) -> list:
        if self.page != other.page:
            return []
        (a, b), (c, d) = sorted(((self.a, self.b), (other.a, other.b)))
        if not a < c < b < d:
            return []
        x = (a * b - c * d) / ((a + b) - (c + d))
        return [x]


def _wiring_from_curves(xs: list, curves: dict) -> LinearWiring:
    """Sweep exact curves into a LinearWiring.

    xs[v-1] is the column of vertex v (ascending); curves maps each edge
    (a, b) to a curve spanning [xs[a-1], xs[b-1]].  Vertex heights are
    curves' shared endpoint values; for spine models every vertex sits at 0.
    """
    n = len(xs)
    heights = {}
    for v in range(1, n + 1):
        incident = [e for e in curves if v in e]
        ys = {curves[e].y_at(xs[v - 1]) for e in incident}
        if len(ys) > 1:
            raise DegeneratePointSet(f"incident curves disagree at vertex {v}")
        heights[v] = ys.pop() if ys else Fraction(0)

    points = {}  # (x, y) -> set of strands crossing there
    for e, f in combinations(sorted(curves), 2):
        if set(e) & set(f):
            continue
        for x in curves[e].crossings_with(curves[f]):
            if not (xs[0] < x <= xs[-1]):
                raise DegeneratePointSet("crossing outside the strip range")
            points.setdefault((x, curves[e].y_at(x)), set()).update((e, f))
    events = {}  # strip index -> [(x, y, strand set)]
    for (x, y), strands in points.items():
        strip = max(i for i in range(1, n) if xs[i - 1] < x)
        events.setdefault(strip, []).append((x, y, strands))

    strips = []
    vertex_pos = []
    left_order = []
    right_order = []
    order: list = []
    for v in range(1, n + 1):
        xv = xs[v - 1]
        ending = [e for e in order if v in e]
        if ending:
            k = order.index(ending[0])
            if order[k : k + len(ending)] != ending:
                raise DegeneratePointSet(f"edges ending at vertex {v} are interleaved")
            del order[k : k + len(ending)]
            pos = k
        else:
            pos = sum(1 for e in order if curves[e].y_at(xv) < heights[v])
        left_order.append(tuple(ending))
        vertex_pos.append(pos)
        starting = sorted(
            (e for e in curves if e[0] == v),
            key=lambda e: curves[e].y_at(xv + (xs[v] - xv) / 2) if v < n else 0,
        )
        right_order.append(tuple(starting))
        order[pos:pos] = starting
        if v < n:
            swaps = []
            for x, y, strands in sorted(events.get(v, []), key=lambda t: (t[0], t[1])):
                # k curves through one point pairwise cross exactly there;
                # realize the concurrency as a reversal of the strand block
                pos0 = min(order.index(e) for e in strands)
                block = order[pos0 : pos0 + len(strands)]
                if set(block) != strands:
                    raise DegeneratePointSet(f"crossing of non-adjacent strands {strands}")
                for i in range(len(block) - 1):
                    for j in range(len(block) - 1 - i):
                        swaps.append(pos0 + j)
                        order[pos0 + j], order[pos0 + j + 1] = (
                            order[pos0 + j + 1],
                            order[pos0 + j],
                        )
            strips.append(tuple(swaps))
    return LinearWiring(n, tuple(strips), tuple(vertex_pos), tuple(left_order), tuple(right_order))


def wiring_from_points(ps: PointSet) -> LinearWiring:
    """Wiring of a straight-line drawing; the points must be x-sorted."""
    pts = list(ps.points)
    if pts != sorted(pts):
        raise DegeneratePointSet("points must be sorted by x for the wiring sweep")
    xs = [p[0] for p in pts]
    curves = {}
    for a, b in combinations(range(1, len(pts) + 1), 2):
        curves[(a, b)] = _SegCurve(pts[a - 1], pts[b - 1])
    return _wiring_from_curves(xs, curves)


# ============================================================
# Named drawings
# ============================================================

def convex(n: int):
    """Crossing set (all linked pairs) and a realizing wiring from points on
    a parabola."""
    if n < 3:
        raise InvalidDrawing("convex drawing needs n >= 3")
    cs = CrossingSet(n, linked_rule_pairs(n))
    ps = PointSet(tuple((Fraction(i), Fraction(i * i)) for i in range(1, n + 1)))
    lw = wiring_from_points(ps)
    if wiring_crossing_set(lw).pairs != cs.pairs:
        raise InternalAssertion("parabola wiring does not realize the linked rule")
    return cs, lw


def twisted(n: int) -> CrossingSet:
    """Crossing set of the twisted drawing: all nested pairs."""
    if n < 3:
        raise InvalidDrawing("twisted drawing needs n >= 3")
    return CrossingSet(n, nested_rule_pairs(n))


def twisted_rotation(n: int) -> RotationSystem:
    """A rotation system realizing the twisted drawing.

    Vertex i sees i+1, ..., n followed by i-1, ..., 1 in clockwise order; the
    derived crossing set is checked against the nested rule.
    """
    rotations = []
    for i in range(1, n + 1):
        rotations.append(tuple(range(i + 1, n + 1)) + tuple(range(i - 1, 0, -1)))
    rs = RotationSystem(n, tuple(rotations))
    if crossings_from_rotation(rs).pairs != nested_rule_pairs(n):
        raise InternalAssertion("twisted rotation pattern broke")
    return rs


def two_page(n: int, page_of_edge: dict, spine_order=None):
    """Crossing set and wiring of a 2-page-book drawing.

    Crossings are the same-page linked pairs along the spine.  Outputs are in
    spine-position labels (position i = i-th vertex on the spine); the page
    map is given in input labels and translated internally.
    """
    if spine_order is None:
        spine_order = list(range(1, n + 1))
    if sorted(spine_order) != list(range(1, n + 1)):
        raise InvalidDrawing("spine_order must be a permutation of 1..n")
    pos = {v: i + 1 for i, v in enumerate(spine_order)}
    pages = {}
    for e, page in page_of_edge.items():
        if page not in (0, 1):
            raise InvalidDrawing(f"page of {e} must be 0 or 1")
        pages[_sorted_pair(pos[e[0]], pos[e[1]])] = page
    for e in combinations(range(1, n + 1), 2):
        if e not in pages:
            raise InvalidDrawing(f"page assignment missing for positions {e}")
    pairs = set()
    for e, f in combinations(combinations(range(1, n + 1), 2), 2):
        if set(e) & set(f) or pages[e] != pages[f]:
            continue
        (a, b), (c, d) = sorted((e, f))
        if a < c < b < d:
            pairs.add(_norm_crossing(e, f))
    cs = CrossingSet(n, frozenset(pairs))
    xs = [Fraction(i) for i in range(1, n + 1)]
    curves = {e: _ArcCurve(e[0], e[1], pages[e]) for e in pages}
    lw = _wiring_from_curves(xs, curves)
    if wiring_crossing_set(lw).pairs != cs.pairs:
        raise InternalAssertion("page arcs do not realize the 2-page rule")
    return cs, lw


def two_page_crossing_minimal_k8():
    """Crossing-minimal 2-page K_8 from the alternating diagonal-band rule:
    edge {i, j} goes to the page of ((i + j) mod 8 < 4).

    Validated by its completely uncrossed spine cycle, the defining property
    of 2-page drawings.
    """
    pages = {e: (1 if (e[0] + e[1]) % 8 < 4 else 0) for e in combinations(range(1, 9), 2)}
    cs, lw = two_page(8, pages)
    crossed = {e for pair in cs.pairs for e in pair}
    spine_cycle = [(i, i + 1) for i in range(1, 8)] + [(1, 8)]
    if any(e in crossed for e in spine_cycle):
        raise InternalAssertion("spine cycle of the 2-page fixture is crossed")
    return cs, lw


def hill(n: int) -> CylindricalDrawing:
    """Geodesic two-circle drawing: half the vertices equally spaced on each
    circle, lateral edges winding the short way (ties counter-clockwise), all
    circle edges in their home face on their shorter side."""
    if n < 3:
        raise InvalidDrawing("hill drawing needs n >= 3")
    p = (n + 1) // 2
    q = n - p
    outer = tuple((i + 1, Fraction(i, p)) for i in range(p))
    inner = tuple((p + j + 1, Fraction(j, q) + Fraction(1, 2 * p * q)) for j in range(q))
    angles = dict(outer + inner)
    lateral = []
    for u in range(1, p + 1):
        for w in range(p + 1, n + 1):
            d = frac1(angles[w] - angles[u])
            omega = d if d <= Fraction(1, 2) else d - 1
            lateral.append(LateralEdge(u, w, omega))
    circle = []
    for ring in (range(1, p + 1), range(p + 1, n + 1)):
        for u, v in combinations(ring, 2):
            ccw = frac1(angles[v] - angles[u])
            arc = ArcDir.CCW if ccw <= Fraction(1, 2) else ArcDir.CW
            circle.append(CircleEdge(u, v, Face.HOME, arc))
    return CylindricalDrawing(outer, inner, tuple(lateral), tuple(circle))


# ============================================================
# Seeded random instances
# ============================================================

def random_cylindrical(n: int, seed: int, strong: bool, attempts: int = 400) -> CylindricalDrawing:
    """Rejection-sample a valid cylindrical drawing of K_n.

    Angular positions are random rationals; each lateral winding picks one of
    its two lifts in (-1, 1), preferring the short one more strongly as
    attempts accumulate; circle edges are home-only when strong is set, and
    home edges take their shorter side so that any direction assignment stays
    drawable.  Deterministic for a fixed seed.
    """
    if n < 3:
        raise InvalidDrawing("need n >= 3")
    rng = random.Random(("cylindrical", n, seed).__repr__())
    denom = 4096
    for attempt in range(attempts):
        p = rng.randint(max(1, n // 2 - 1), min(n - 1, n // 2 + 1))
        nums = rng.sample(range(denom), n)
        angles = {v: Fraction(nums[v - 1], denom) for v in range(1, n + 1)}
        outer = tuple((v, angles[v]) for v in range(1, p + 1))
        inner = tuple((v, angles[v]) for v in range(p + 1, n + 1))
        pflip = 0.3 * (0.85 ** attempt)
        lateral = []
        for u in range(1, p + 1):
            for w in range(p + 1, n + 1):
                d = frac1(angles[w] - angles[u])
                short, long_ = (d, d - 1) if d <= Fraction(1, 2) else (d - 1, d)
                omega = long_ if rng.random() < pflip else short
                lateral.append(LateralEdge(u, w, omega))
        circle = []
        for ring in (range(1, p + 1), range(p + 1, n + 1)):
            for u, v in combinations(ring, 2):
                if strong:
                    face = Face.HOME
                else:
                    face = Face.LATERAL if rng.random() < 0.35 else Face.HOME
                ccw = frac1(angles[v] - angles[u])
                if face is Face.HOME:
                    arc = ArcDir.CCW if ccw <= Fraction(1, 2) else ArcDir.CW
                else:
                    arc = rng.choice((ArcDir.CCW, ArcDir.CW))
                circle.append(CircleEdge(u, v, face, arc))
        try:
            cd = CylindricalDrawing(outer, inner, tuple(lateral), tuple(circle))
            cyl_crossing_set(cd)  # rejects anything with two crossings on a 4-subset
            return cd
        except InvalidDrawing:
            continue
    raise GaveUp(attempts)


def random_point_set(n: int, seed: int, attempts: int = 200) -> PointSet:
    """Random rational points, x-sorted, in general position."""
    rng = random.Random(("points", n, seed).__repr__())
    for _ in range(attempts):
        ys = rng.sample(range(-8 * n * n, 8 * n * n + 1), n)
        try:
            return PointSet(tuple((Fraction(i), Fraction(ys[i - 1])) for i in range(1, n + 1)))
        except DegeneratePointSet:
            continue
    raise GaveUp(attempts)


def random_x_monotone(n: int, seed: int) -> LinearWiring:
    """Random x-monotone instance: a straight-line drawing or a 2-page
    drawing, mixed by seed; deterministic for a fixed seed."""
    if n < 2:
        raise InvalidDrawing("need n >= 2")
    rng = random.Random(("xmono", n, seed).__repr__())
    for attempt in range(200):
        if rng.random() < 0.5:
            try:
                return wiring_from_points(random_point_set(n, seed * 1000 + attempt))
            except DegeneratePointSet:
                continue
        pages = {e: rng.randint(0, 1) for e in combinations(range(1, n + 1), 2)}
        _, lw = two_page(n, pages)
        return lw
    raise GaveUp(200)
