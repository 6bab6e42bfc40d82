"""Independent checker for obstacle representations.

Only the raw placement, the obstacle polygons and :mod:`obsrep.geom`
predicates are consulted; nothing here knows how a representation was built.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .geom import Segment, no_three_collinear, on_segment, point_in_convex, seg_hits_obstacle
from .model import Graph, ObstacleRepresentation, Pair


@dataclass
class Report:
    n: int
    obstacles: int
    blocked_edges: list[Pair] = field(default_factory=list)        # edges of G that are blocked
    unblocked_non_edges: list[Pair] = field(default_factory=list)  # non-edges nobody blocks
    obstacles_containing_vertices: list[tuple[int, int]] = field(default_factory=list)
    edges_through_vertices: list[tuple[Pair, int]] = field(default_factory=list)
    collinear: bool = False                                        # warning only

    @property
    def passed(self) -> bool:
        return not (self.blocked_edges or self.unblocked_non_edges
                    or self.obstacles_containing_vertices or self.edges_through_vertices)

    @property
    def misclassified(self) -> int:
        return len(self.blocked_edges) + len(self.unblocked_non_edges)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n": self.n,
            "obstacles": self.obstacles,
            "blockedEdges": [list(p) for p in self.blocked_edges],
            "unblockedNonEdges": [list(p) for p in self.unblocked_non_edges],
            "obstaclesContainingVertices": [list(t) for t in self.obstacles_containing_vertices],
            "edgesThroughVertices": [[list(p), v] for p, v in self.edges_through_vertices],
            "collinearWarning": self.collinear,
        }


def _check_placement(G: Graph, rep: ObstacleRepresentation) -> None:
    if len(rep.placement) != G.n:
        raise ValueError(f"placement has {len(rep.placement)} points for {G.n} vertices")
    if len(set(rep.placement)) != G.n:
        raise ValueError("placement is not injective")


def hit_lists(rep: ObstacleRepresentation) -> dict[Pair, list[int]]:
    """For every vertex pair, the indices of the obstacles its segment meets."""
    pts = rep.placement
    obs = rep.obstacles
    boxes = [o.bbox for o in obs]
    out: dict[Pair, list[int]] = {}
    for u, v in itertools.combinations(range(len(pts)), 2):
        s = Segment(pts[u], pts[v])
        x0, x1 = sorted((s.a.x, s.b.x))
        y0, y1 = sorted((s.a.y, s.b.y))
        hits = []
        for k, (bx0, by0, bx1, by1) in enumerate(boxes):
            if bx0 > x1 or bx1 < x0 or by0 > y1 or by1 < y0:
                continue
            if seg_hits_obstacle(s, obs[k]):
                hits.append(k)
        out[(u, v)] = hits
    return out


def verify(G: Graph, rep: ObstacleRepresentation) -> Report:
    _check_placement(G, rep)
    pts = rep.placement
    rpt = Report(G.n, len(rep.obstacles))
    for p, hits in hit_lists(rep).items():
        if p in G.edges and hits:
            rpt.blocked_edges.append(p)
        elif p not in G.edges and not hits:
            rpt.unblocked_non_edges.append(p)
    for k, o in enumerate(rep.obstacles):
        for v, q in enumerate(pts):
            if point_in_convex(o, q):
                rpt.obstacles_containing_vertices.append((k, v))
    for u, v in sorted(G.edges):
        s = Segment(pts[u], pts[v])
        for w, q in enumerate(pts):
            if w != u and w != v and on_segment(q, s):
                rpt.edges_through_vertices.append(((u, v), w))
    rpt.collinear = not no_three_collinear(pts)
    return rpt


def blocking_multiplicity(G: Graph, rep: ObstacleRepresentation) -> dict[Pair, int]:
    _check_placement(G, rep)
    hits = hit_lists(rep)
    return {p: len(hits[p]) for p in G.non_edges()}


__all__ = ["Report", "verify", "blocking_multiplicity", "hit_lists"]
