"""Helpers shared by all constructions: complete-graph arrangements, obstacles
seated on faces, and the exact checks used inside halving searches."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .. import arrangement as arrmod
from ..geom import (ConvexObstacle, HALF, Point, Segment, convex_hull, mpq, no_three_collinear,
                    on_segment, point_in_convex, seg_hits_obstacle)
from ..model import ObstacleRepresentation, Pair, Rule, pair


@dataclass
class Complete:
    """The geometric complete graph on a point set and its arrangement."""

    points: tuple[Point, ...]
    pairs: list[Pair]
    index: dict[Pair, int]
    A: arrmod.Arrangement

    @classmethod
    def build(cls, points: Sequence[Point]) -> "Complete":
        pairs = list(itertools.combinations(range(len(points)), 2))
        segs = [Segment(points[u], points[v]) for u, v in pairs]
        return cls(tuple(points), pairs, {p: i for i, p in enumerate(pairs)}, arrmod.build(segs))

    def segment(self, p: Pair) -> Segment:
        return self.A.segments[self.index[p]]

    def common_face(self, group: Iterable[Pair]) -> int | None:
        ids = [self.index[p] for p in group]
        found = self.A.common_bounded_faces(ids)
        return found[0] if found else None

    def piece_midpoint(self, face: int, p: Pair) -> Point:
        """Midpoint of the boundary piece of ``p``'s segment along ``face``."""
        es = self.A.face_edges_of_segment(face, self.index[p])
        if not es:
            raise ValueError(f"segment {p} does not bound face {face}")
        return self.A.edge_midpoint(es[0])

    def interior_point(self, p: Pair) -> Point:
        """A point of segment ``p`` lying on no other segment."""
        return self.A.edge_midpoint(self.A.seg_edges[self.index[p]][0])


@dataclass
class FaceGroup:
    """A group of pairs sharing a bounded face, with one seat per pair."""

    tag: str
    pairs: tuple[Pair, ...]
    face: int | None
    seats: dict[Pair, Point]

    def obstacle(self, chosen: Iterable[Pair]) -> ConvexObstacle:
        return convex_hull(self.seats[p] for p in chosen)


def face_group(K: Complete, tag: str, pairs: Sequence[Pair]) -> FaceGroup | None:
    """Seat each pair on a common bounded face; a single pair gets an
    interior point of its segment.  ``None`` if no common face exists."""
    pairs = tuple(pairs)
    if len(pairs) == 1:
        return FaceGroup(tag, pairs, None, {pairs[0]: K.interior_point(pairs[0])})
    f = K.common_face(pairs)
    if f is None:
        return None
    return FaceGroup(tag, pairs, f, {p: K.piece_midpoint(f, p) for p in pairs})


def arc_obstacle(points: Sequence[Point], chain: Sequence[int]) -> ConvexObstacle:
    """Hull of the midpoints of consecutive chords of a convex chain plus the
    midpoint of its closing chord; meets every chord of the chain."""
    mids = [Segment(points[a], points[b]).midpoint for a, b in zip(chain, chain[1:])]
    mids.append(Segment(points[chain[0]], points[chain[-1]]).midpoint)
    return convex_hull(mids)


def fan_obstacle(points: Sequence[Point], apex: int, first: int, last: int, lam: mpq) -> ConvexObstacle:
    x = points[apex]

    def toward(t: int) -> Point:
        q = points[t]
        return Point(x.x + lam * (q.x - x.x), x.y + lam * (q.y - x.y))

    if first == last:
        return ConvexObstacle((toward(first),))
    return ConvexObstacle((toward(first), toward(last)))


def blocked_pairs(points: Sequence[Point], o: ConvexObstacle) -> set[Pair]:
    x0, y0, x1, y1 = o.bbox
    out = set()
    for u, v in itertools.combinations(range(len(points)), 2):
        a, b = points[u], points[v]
        if max(a.x, b.x) < x0 or min(a.x, b.x) > x1 or max(a.y, b.y) < y0 or min(a.y, b.y) > y1:
            continue
        if seg_hits_obstacle(Segment(a, b), o):
            out.add((u, v))
    return out


def contains_vertex(points: Sequence[Point], o: ConvexObstacle) -> bool:
    return any(point_in_convex(o, p) for p in points)


def blocks_exactly(points: Sequence[Point], o: ConvexObstacle, targets: set[Pair]) -> bool:
    return not contains_vertex(points, o) and blocked_pairs(points, o) == targets


def segments_clear_of_vertices(points: Sequence[Point], segs: Iterable[Pair]) -> bool:
    """No segment in ``segs`` passes through a third point."""
    for u, v in segs:
        s = Segment(points[u], points[v])
        for w, q in enumerate(points):
            if w != u and w != v and on_segment(q, s):
                return False
    return True


def convex_position(n: int) -> tuple[Point, ...]:
    return tuple(Point(mpq(i), mpq(i * i)) for i in range(n))


def empty_graph_rep(n: int) -> ObstacleRepresentation:
    """All vertices in convex position behind one obstacle."""
    pts = convex_position(n)
    if n < 2:
        return ObstacleRepresentation(pts, meta={"method": "empty"})
    o = arc_obstacle(pts, list(range(n)))
    targets = frozenset(itertools.combinations(range(n), 2))
    return ObstacleRepresentation(pts, [o], ["O_all"], [Rule("arc", targets, tuple(range(n)))],
                                  meta={"method": "empty"})


def clique_rep(n: int) -> ObstacleRepresentation:
    return ObstacleRepresentation(convex_position(n), meta={"method": "clique"})


def general_position(points: Sequence[Point]) -> bool:
    return len(set(points)) == len(points) and no_three_collinear(points)


def rebuild_obstacle(rule: Rule, points: Sequence[Point], K: Complete | None) -> ConvexObstacle | None:
    """Recompute an obstacle from its rule on a new placement (``None`` if the
    rule cannot be realized there)."""
    targets = sorted(rule.targets)
    if rule.kind == "face":
        if len(targets) == 1:
            return ConvexObstacle((K.interior_point(targets[0]),))
        # the face shared by the whole group, when recorded, not just by the targets
        group = [tuple(q) for q in rule.params] or targets
        f = K.common_face(group)
        if f is None:
            return None
        return convex_hull(K.piece_midpoint(f, p) for p in targets)
    if rule.kind == "point":
        return ConvexObstacle((K.interior_point(targets[0]),))
    if rule.kind == "arc":
        return arc_obstacle(points, list(rule.params))
    if rule.kind == "fan":
        apex, first, last, lam = rule.params
        return fan_obstacle(points, apex, first, last, lam)
    if rule.kind == "fixed":
        return None
    raise ValueError(f"unknown rule kind {rule.kind!r}")


def halve(x: mpq) -> mpq:
    return x * HALF


__all__ = [
    "Complete", "FaceGroup", "face_group", "arc_obstacle", "fan_obstacle", "blocked_pairs",
    "blocks_exactly", "contains_vertex", "segments_clear_of_vertices", "convex_position",
    "empty_graph_rep", "clique_rep", "general_position", "rebuild_obstacle", "halve", "pair",
]
