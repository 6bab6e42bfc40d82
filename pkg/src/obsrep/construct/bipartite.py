"""Representations of bipartite graphs, their complements and split graphs.

Vertices sit on a certified dilated drawing of K_{m,n} whose two columns are
bowed toward each other.  Each level of the drawing gets one hull obstacle in
the bounded face shared by its cap; the two lowest and the two highest levels
share a corner obstacle.  Sides whose internal pairs are all non-edges get one
long, thin obstacle hugging the bowed column.
"""
from __future__ import annotations

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..drawing import certify
from ..geom import Point, mpq
from ..model import Graph, ObstacleRepresentation, Rule, pair
from .common import (Complete, FaceGroup, arc_obstacle, blocks_exactly, clique_rep,
                     empty_graph_rep, face_group, general_position, halve)

log = logging.getLogger(__name__)

MAX_HALVINGS = 60


def _bow(size: int) -> list[int]:
    return [i * (size - 1 - i) for i in range(size)]


@dataclass
class BipartiteGeometry:
    m: int
    n: int
    points: tuple[Point, ...]          # p_1..p_m then q_1..q_n
    K: Complete
    levels: dict[int, FaceGroup]       # level k -> seats of all its pairs
    corners: dict[str, FaceGroup]
    xi: mpq
    epsilon: mpq

    def p(self, i: int) -> int:
        return i

    def q(self, j: int) -> int:
        return self.m + j

    @property
    def num_levels(self) -> int:
        return self.m + self.n - 1

    def level_pairs(self, k: int) -> list[tuple[int, int]]:
        """Slot pairs (p-slot, q-slot) of level k (1-based), bottom-up in p."""
        return [(i, self.m + (k - 1 - i)) for i in range(self.m) if 0 <= k - 1 - i < self.n]


def _corner_levels(L: int) -> dict[str, tuple[int, ...]]:
    if L < 2:
        return {}
    out = {"bottom": (1, 2)}
    if L >= 3:
        out["top"] = (L - 1, L)
    return out


def _try_geometry(m: int, n: int, ys_p, ys_q, xi: mpq, eps: mpq) -> BipartiteGeometry | None:
    pts = tuple([Point(xi * f, y) for f, y in zip(_bow(m), ys_p)]
                + [Point(1 - xi * f, y) for f, y in zip(_bow(n), ys_q)])
    if not general_position(pts):
        return None
    K = Complete.build(pts)
    geo = BipartiteGeometry(m, n, pts, K, {}, {}, xi, eps)
    for k in range(1, m + n):
        g = face_group(K, f"level {k}", geo.level_pairs(k))
        if g is None:
            return None
        geo.levels[k] = g
    for name, ks in _corner_levels(m + n - 1).items():
        g = face_group(K, f"corner {name}", [p for k in ks for p in geo.level_pairs(k)])
        if g is None:
            return None
        geo.corners[name] = g
    for side in (range(m), range(m, m + n)):
        if len(side) >= 2:
            o = arc_obstacle(pts, list(side))
            if not blocks_exactly(pts, o, set(itertools.combinations(side, 2))):
                return None
    return geo


@lru_cache(maxsize=64)
def bipartite_geometry(m: int, n: int) -> BipartiteGeometry:
    """Certified K_{m,n} with both columns bowed inward by a verified sagitta."""
    cert = certify(m, n)
    D = cert.drawing
    ys_p = [p.y for p in D.P]
    ys_q = [q.y for q in D.Q]
    top = max(_bow(m) + _bow(n))
    xi = mpq(1, 4 * top) if top else mpq(0)
    for _ in range(MAX_HALVINGS):
        geo = _try_geometry(m, n, ys_p, ys_q, xi, cert.certificate.epsilon)
        if geo is not None:
            log.info("bowed K_{%d,%d} with xi=%s", m, n, xi)
            return geo
        if not xi:
            break
        xi = halve(xi)
    raise RuntimeError(f"no admissible bowing for K_{{{m},{n}}}")


def _groups(geo: BipartiteGeometry, cross_non_edges: set[tuple[int, int]], merges: Sequence[str]):
    """(group, chosen slot pairs) for every group that must block something."""
    L = geo.num_levels
    corner_levels = _corner_levels(L)
    merged = {k: name for name in merges for k in corner_levels[name]}
    out = []
    for name in merges:
        g = geo.corners[name]
        chosen = [p for p in g.pairs if p in cross_non_edges]
        if chosen:
            out.append((g, chosen))
    for k in range(1, L + 1):
        if k in merged:
            continue
        g = geo.levels[k]
        chosen = [p for p in g.pairs if p in cross_non_edges]
        if chosen:
            out.append((g, chosen))
    return out


def _merge_options(L: int) -> list[tuple[str, ...]]:
    if L >= 4:
        return [("bottom", "top")]
    if L == 3:
        return [("bottom",), ("top",)]
    if L == 2:
        return [("bottom",)]
    return [()]


def _two_sided(G: Graph, A: Sequence[int], B: Sequence[int], block_A: bool, block_B: bool,
               method: str) -> ObstacleRepresentation:
    if not G.edges:
        rep = empty_graph_rep(G.n)
        rep.meta["method"] = method
        return rep
    if not A or not B:
        rep = clique_rep(G.n)
        rep.meta["method"] = method
        return rep
    m, n = len(A), len(B)
    geo = bipartite_geometry(m, n)
    best = None
    for rev_a, rev_b in ((False, False), (False, True), (True, False), (True, True)):
        a_order = list(A)[::-1] if rev_a else list(A)
        b_order = list(B)[::-1] if rev_b else list(B)
        slot_of = {v: i for i, v in enumerate(a_order)}
        slot_of.update({v: m + j for j, v in enumerate(b_order)})
        vertex_of = {s: v for v, s in slot_of.items()}
        cross = {(slot_of[a], slot_of[b]) for a in A for b in B if not G.has_edge(a, b)}
        for merges in _merge_options(geo.num_levels):
            groups = _groups(geo, cross, merges)
            count = len(groups) + (block_A and m >= 2) + (block_B and n >= 2)
            if best is None or count < best[0]:
                best = (count, slot_of, vertex_of, groups, a_order, b_order)
        if best[0] <= G.n - 1:
            break
    _, slot_of, vertex_of, groups, a_order, b_order = best
    placement = tuple(geo.points[slot_of[v]] for v in range(G.n))
    obstacles, tags, rules = [], [], []
    for flag, order, tag in ((block_A, a_order, "O_P"), (block_B, b_order, "O_Q")):
        if flag and len(order) >= 2:
            obstacles.append(arc_obstacle(placement, order))
            tags.append(tag)
            rules.append(Rule("arc", frozenset(pair(u, v) for u, v in itertools.combinations(order, 2)),
                              tuple(order)))
    for g, chosen in groups:
        obstacles.append(g.obstacle(chosen))
        tags.append(g.tag)
        rules.append(Rule("face", frozenset(pair(vertex_of[s], vertex_of[t]) for s, t in chosen),
                          tuple(pair(vertex_of[s], vertex_of[t]) for s, t in g.pairs)))
    meta = {"method": method, "m": m, "n": n, "epsilon": geo.epsilon, "xi": geo.xi}
    return ObstacleRepresentation(placement, obstacles, tags, rules, meta)


def bipartition(G: Graph) -> tuple[list[int], list[int]]:
    """A 2-coloring of ``G`` by breadth-first search; ValueError if none exists."""
    side = [-1] * G.n
    adj = [[] for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].append(v)
        adj[v].append(u)
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        todo = deque([s])
        while todo:
            u = todo.popleft()
            for v in adj[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    todo.append(v)
                elif side[v] == side[u]:
                    raise ValueError("graph is not bipartite")
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


def _check_partition(G: Graph, A: Sequence[int], B: Sequence[int]) -> None:
    if sorted(list(A) + list(B)) != list(range(G.n)):
        raise ValueError("sides do not partition the vertex set")


def _independent(G: Graph, S: Sequence[int]) -> bool:
    return not any(G.has_edge(u, v) for u, v in itertools.combinations(S, 2))


def represent_bipartite(H: Graph, A: Sequence[int] | None = None,
                        B: Sequence[int] | None = None) -> ObstacleRepresentation:
    if A is None or B is None:
        A, B = bipartition(H)
    _check_partition(H, A, B)
    if not (_independent(H, A) and _independent(H, B)):
        raise ValueError("invalid bipartition: an edge joins two vertices of one side")
    return _two_sided(H, A, B, True, True, "bipartite")


def represent_cobipartite(H: Graph, A: Sequence[int] | None = None,
                          B: Sequence[int] | None = None) -> ObstacleRepresentation:
    """Representation of the complement of the bipartite graph ``H``."""
    if A is None or B is None:
        A, B = bipartition(H)
    _check_partition(H, A, B)
    if not (_independent(H, A) and _independent(H, B)):
        raise ValueError("invalid bipartition: an edge joins two vertices of one side")
    return _two_sided(H.complement(), A, B, False, False, "cobipartite")


def split_partition(G: Graph) -> tuple[list[int], list[int]]:
    """(clique, independent set) of a split graph, from its degree sequence."""
    order = sorted(range(G.n), key=lambda v: (-len(G.neighbours(v)), v))
    deg = [len(G.neighbours(v)) for v in order]
    m = max((i + 1 for i in range(G.n) if deg[i] >= i), default=0)
    clique, rest = sorted(order[:m]), sorted(order[m:])
    if not G.induced_is_clique(clique) or not _independent(G, rest):
        raise ValueError("graph is not a split graph")
    return clique, rest


def represent_split(G: Graph, clique: Sequence[int], independent: Sequence[int]) -> ObstacleRepresentation:
    _check_partition(G, clique, independent)
    if not G.induced_is_clique(clique) or not _independent(G, independent):
        raise ValueError("partition is not a split partition")
    return _two_sided(G, list(independent), list(clique), True, False, "split")


__all__ = ["represent_bipartite", "represent_cobipartite", "represent_split", "bipartition", "split_partition",
           "bipartite_geometry", "BipartiteGeometry"]
