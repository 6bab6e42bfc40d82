"""Exact rational plane geometry.

Every coordinate is a ``gmpy2.mpq``.  No predicate in this module (or in any
module built on it) ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import gmpy2
from gmpy2 import mpq

Scalar = type(mpq(0))
ScalarLike = Union[int, str, Fraction, "mpq"]

ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


def Q(value: ScalarLike, den: int | None = None) -> mpq:
    """Coerce ``value`` (int, "a/b" string, Fraction, mpq) to an exact scalar."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, Scalar):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        num, _, d = value.strip().partition("/")
        return mpq(int(num), int(d)) if d else mpq(int(num))
    return mpq(value)


def scalar_str(q: mpq) -> str:
    return f"{q.numerator}/{q.denominator}"


class Point(NamedTuple):
    x: mpq
    y: mpq


def P(x: ScalarLike, y: ScalarLike) -> Point:
    return Point(Q(x), Q(y))


class Segment(NamedTuple):
    a: Point
    b: Point

    def ordered(self) -> "Segment":
        """Endpoints sorted lexicographically (left-to-right, then bottom-to-top)."""
        return self if self.a <= self.b else Segment(self.b, self.a)

    def key(self) -> tuple[Point, Point]:
        s = self.ordered()
        return (s.a, s.b)

    @property
    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) * HALF, (self.a.y + self.b.y) * HALF)

    def slope(self) -> mpq:
        dx = self.b.x - self.a.x
        if dx == 0:
            raise ValueError("vertical segment has no finite slope")
        return (self.b.y - self.a.y) / dx

    def y_at(self, x: mpq) -> mpq:
        a, b = self.a, self.b
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)


def S(a: Point, b: Point) -> Segment:
    return Segment(a, b)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of twice the signed area of triangle pqr (+1 means counterclockwise)."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def on_segment(p: Point, s: Segment) -> bool:
    """Closed membership of ``p`` in segment ``s``."""
    a, b = s
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def seg_intersection(s1: Segment, s2: Segment) -> None | Point | Segment:
    """Exact intersection of two closed segments.

    Returns ``None`` when disjoint, a :class:`Point` for a single common point,
    or a :class:`Segment` (lexicographically ordered) for a collinear overlap.
    """
    a, b = s1
    c, d = s2
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 == 0 and o2 == 0:
        if o3 != 0 or o4 != 0:  # s1 degenerate but not on s2's line
            return None
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return None
        if lo == hi:
            return Point(*lo)
        return Segment(Point(*lo), Point(*hi))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    if o1 == 0:
        return Point(*c)
    if o2 == 0:
        return Point(*d)
    if o3 == 0:
        return Point(*a)
    if o4 == 0:
        return Point(*b)
    return line_intersection(s1, s2)


def line_intersection(s1: Segment, s2: Segment) -> Point:
    """Intersection of the supporting lines; caller guarantees they are not parallel."""
    (ax, ay), (bx, by) = s1
    (cx, cy), (dx, dy) = s2
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    den = rx * sy - ry * sx
    t = ((cx - ax) * sy - (cy - ay) * sx) / den
    return Point(ax + t * rx, ay + t * ry)


def sqdist(p: Point, q: Point) -> mpq:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


@dataclass(frozen=True)
class ConvexObstacle:
    """A closed convex obstacle: a point (rank 0), a segment (rank 1) or a
    strictly convex polygon listed counterclockwise (rank 2)."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("obstacle needs at least one vertex")
        if len(vs) == 2 and vs[0] == vs[1]:
            raise ValueError("rank-1 obstacle with coincident endpoints")
        if len(vs) >= 3:
            k = len(vs)
            for i in range(k):
                if orient(vs[i], vs[(i + 1) % k], vs[(i + 2) % k]) <= 0:
                    raise ValueError("polygon vertices are not strictly convex and counterclockwise")

    @property
    def rank(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def bbox(self) -> tuple[mpq, mpq, mpq, mpq]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def edges(self) -> list[Segment]:
        vs = self.vertices
        if len(vs) == 1:
            return []
        if len(vs) == 2:
            return [Segment(vs[0], vs[1])]
        return [Segment(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def convex_hull(pts: Iterable[Point]) -> ConvexObstacle:
    """Monotone-chain hull; collinear and duplicate points are dropped."""
    ps = sorted(set(Point(*p) for p in pts))
    if not ps:
        raise ValueError("convex hull of an empty set")
    if len(ps) == 1:
        return ConvexObstacle((ps[0],))
    if all(orient(ps[0], ps[-1], p) == 0 for p in ps):
        return ConvexObstacle((ps[0], ps[-1]))

    def chain(seq: Sequence[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(ps)
    upper = chain(ps[::-1])
    return ConvexObstacle(tuple(lower[:-1] + upper[:-1]))


def point_in_convex(o: ConvexObstacle, p: Point) -> bool:
    vs = o.vertices
    if len(vs) == 1:
        return vs[0] == p
    if len(vs) == 2:
        return on_segment(p, Segment(vs[0], vs[1]))
    k = len(vs)
    return all(orient(vs[i], vs[(i + 1) % k], p) >= 0 for i in range(k))


def _bbox_disjoint(s: Segment, box: tuple[mpq, mpq, mpq, mpq]) -> bool:
    (ax, ay), (bx, by) = s
    x0, y0, x1, y1 = box
    return (max(ax, bx) < x0 or min(ax, bx) > x1
            or max(ay, by) < y0 or min(ay, by) > y1)


def seg_hits_obstacle(s: Segment, o: ConvexObstacle) -> bool:
    """Closed segment meets closed obstacle."""
    if _bbox_disjoint(s, o.bbox):
        return False
    vs = o.vertices
    if len(vs) == 1:
        return on_segment(vs[0], s)
    if len(vs) == 2:
        return seg_intersection(s, Segment(vs[0], vs[1])) is not None
    a, b = s
    k = len(vs)
    # separating-axis test against each polygon side
    inside_a = inside_b = True
    for i in range(k):
        u, v = vs[i], vs[(i + 1) % k]
        oa, ob = orient(u, v, a), orient(u, v, b)
        if oa < 0 and ob < 0:
            return False
        inside_a &= oa >= 0
        inside_b &= ob >= 0
    if inside_a or inside_b:
        return True
    return any(seg_intersection(s, e) is not None for e in o.edges())


def no_three_collinear(pts: Sequence[Point]) -> bool:
    """True iff no three of ``pts`` are collinear (distinct points assumed)."""
    n = len(pts)
    for i in range(n):
        pi = pts[i]
        seen: set = set()
        for j in range(n):
            if j == i:
                continue
            dx = pts[j][0] - pi[0]
            dy = pts[j][1] - pi[1]
            d = ('v',) if dx == 0 else dy / dx
            if d in seen:
                return False
            seen.add(d)
    return True


__all__ = [
    "Scalar", "Q", "P", "Point", "Segment", "S", "ConvexObstacle", "orient",
    "on_segment", "seg_intersection", "line_intersection", "sqdist",
    "convex_hull", "point_in_convex", "seg_hits_obstacle", "scalar_str",
    "no_three_collinear", "ZERO", "ONE", "HALF", "gmpy2",
]
