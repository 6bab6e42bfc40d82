"""Recursive halving layout for general graphs and for subcolored graphs.

The vertex slots 0..n-1 are grouped into blocks (singletons for general
graphs, color classes for subcolorings).  Slots start on a certified dilated
K_{n,n}: the bottom blocks on the left line, the top blocks on the right
line.  Every later step splits each column with at least two blocks into a
bottom and a top part and shifts one part sideways by a tiny ``eps_j``, so
every column pair that is split off forms a squeezed copy of a bipartite
drawing.  Each level of each such piece gets one obstacle.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .. import arrangement as arrmod
from ..caps import good_face, level_cap
from ..drawing import certify, level_edges
from ..geom import ConvexObstacle, HALF, Point, Segment, mpq
from ..model import Graph, ObstacleRepresentation, Pair, Rule, Subcoloring, pair
from .common import (Complete, FaceGroup, blocks_exactly, face_group, fan_obstacle, general_position,
                     halve, segments_clear_of_vertices)

log = logging.getLogger(__name__)

DELTA = mpq(1, 16)
MAX_HALVINGS = 200


@dataclass(frozen=True)
class Piece:
    """The bipartite sub-drawing created at ``step``: ``left`` against ``right``."""

    step: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def level(self, k: int) -> list[tuple[int, int]]:
        a, b = len(self.left), len(self.right)
        return [(self.left[i], self.right[k - 1 - i]) for i in range(a) if 0 <= k - 1 - i < b]

    def levels(self) -> list[list[tuple[int, int]]]:
        return [self.level(k) for k in range(1, len(self.left) + len(self.right))]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.left for v in self.right]


@dataclass
class Fan:
    apex: int
    first: int
    last: int
    targets: frozenset[Pair]
    lam: mpq
    obstacle: ConvexObstacle


@dataclass
class Layout:
    n: int
    points: tuple[Point, ...]
    pieces: list[Piece]
    groups: list[FaceGroup]
    fans: list[Fan]
    epsilons: list[mpq] = field(default_factory=list)
    alpha: mpq | None = None
    xi: mpq = mpq(0)


def _split(col: tuple[int, ...], block_of: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    blocks = sorted({block_of[s] for s in col})
    if len(blocks) < 2:
        return col, ()
    cut = blocks[(len(blocks) + 1) // 2]
    return tuple(s for s in col if block_of[s] < cut), tuple(s for s in col if block_of[s] >= cut)


def band_height(cert, delta: mpq) -> mpq:
    """Half the smallest clearance between a level's reference height and the
    lowest boundary piece of its face along a rising edge, capped at ``delta``."""
    D, A = cert.drawing, cert.arrangement
    alpha = delta
    for k in range(1, D.m + D.n):
        es = level_edges(D, k)
        if len(es) < 2:
            continue
        f = good_face(level_cap(D, k, A), A)
        if k % 2:
            ref = D.P[(k + 1) // 2 - 1].y
        else:
            i = (k + 2) // 2
            ref = (D.P[i - 2].y + D.P[i - 1].y) * HALF
        for i, j in es:
            if j <= i:
                continue
            ids = A.face_edges_of_segment(f, D.edge_index((i, j)))
            low = min(A.vertices[A.he_origin[h]].y for e in ids for h in (2 * e, 2 * e + 1))
            if ref - low > 0:
                alpha = min(alpha, (ref - low) * HALF)
    return alpha


def _band_ok(pts: Sequence[Point], pieces: Sequence[Piece], alpha: mpq) -> bool:
    strips = []
    for pc in pieces:
        xs = [pts[s].x for s in pc.left + pc.right]
        strips.append((pc.step, min(xs), max(xs)))
    for pc in pieces:
        newer = [(s0, s1) for st, s0, s1 in strips if st > pc.step]
        if not newer:
            continue
        for u, v in pc.edges():
            a, b = pts[u], pts[v]
            seg = Segment(a, b)
            for s0, s1 in newer:
                lo, hi = max(a.x, s0), min(b.x, s1)
                if lo > hi:
                    continue
                ylo, yhi = seg.y_at(lo), seg.y_at(hi)
                if not any(abs(ylo - p.y) < alpha and abs(yhi - p.y) < alpha for p in (a, b)):
                    return False
    return True


def _caps_ok(pts: Sequence[Point], pieces: Sequence[Piece]) -> bool:
    drawn = [pair(u, v) for pc in pieces for u, v in pc.edges()]
    index = {p: i for i, p in enumerate(drawn)}
    A = arrmod.build(Segment(pts[u], pts[v]) for u, v in drawn)
    for pc in pieces:
        for lvl in pc.levels():
            if len(lvl) >= 2 and not A.common_bounded_faces([index[pair(*e)] for e in lvl]):
                return False
    return True


def _step_ok(pts, pieces, alpha, last: bool) -> bool:
    if not _band_ok(pts, pieces, alpha):
        return False
    if not segments_clear_of_vertices(pts, [e for pc in pieces for e in pc.edges()]):
        return False
    if last and not general_position(pts):
        return False
    return _caps_ok(pts, pieces)


def _recurse(n: int, block_of: Sequence[int], final_columns_singletons: bool):
    """Run the halving steps; returns x-coordinates, y-coordinates, pieces,
    epsilons, alpha and the final columns."""
    cert = certify(n, n, delta=DELTA)
    ys = [p.y for p in cert.drawing.P]
    alpha = band_height(cert, cert.certificate.delta)
    bottom, top = _split(tuple(range(n)), block_of)
    x = [mpq(0)] * n
    for s in top:
        x[s] = mpq(1)
    pieces = [Piece(1, bottom, top)]
    cols = [bottom, top]
    epsilons = [mpq(1)]
    step = 1
    while any(len(_split(c, block_of)[1]) for c in cols):
        step += 1
        new_cols, movers = [], []
        for k, col in enumerate(cols, 1):
            lo, hi = _split(col, block_of)
            new_cols += [lo, hi]
            if lo and hi:
                pieces.append(Piece(step, lo, hi))
                movers.append((hi, 1) if k % 2 else (lo, -1))
        last = not any(len(_split(c, block_of)[1]) for c in new_cols)
        eps = epsilons[-1] / 4
        for _ in range(MAX_HALVINGS):
            xs = list(x)
            for slots, sign in movers:
                for s in slots:
                    xs[s] += sign * eps
            pts = [Point(a, b) for a, b in zip(xs, ys)]
            if _step_ok(pts, pieces, alpha, last and final_columns_singletons):
                break
            eps = halve(eps)
        else:
            raise RuntimeError(f"no admissible shift at step {step}")
        log.info("step %d: eps=%s", step, eps)
        x = xs
        epsilons.append(eps)
        cols = new_cols
    return x, ys, pieces, epsilons, alpha, [c for c in cols if c]


def _bow(size: int) -> list[int]:
    return [i * (size - 1 - i) for i in range(size)]


def _fans(cols, cliques_of_col) -> list[tuple[int, int, int, frozenset[Pair]]]:
    """(apex, first, last, targets) for every vertex with a later clique in its column."""
    out = []
    for col, sizes in zip(cols, cliques_of_col):
        starts = [0]
        for s in sizes:
            starts.append(starts[-1] + s)
        for t in range(len(sizes) - 1):
            first = col[starts[t + 1]]
            for apex in col[starts[t]:starts[t + 1]]:
                targets = frozenset(pair(apex, v) for v in col[starts[t + 1]:])
                out.append((apex, first, col[-1], targets))
    return out


def _seat_fans(pts, specs) -> list[Fan] | None:
    fans = []
    for apex, first, last, targets in specs:
        lam = HALF
        for _ in range(40):
            o = fan_obstacle(pts, apex, first, last, lam)
            if blocks_exactly(pts, o, set(targets)):
                fans.append(Fan(apex, first, last, targets, lam, o))
                break
            lam = halve(lam)
        else:
            return None
    return fans


def _groups(K: Complete, pieces: Sequence[Piece]) -> list[FaceGroup] | None:
    out = []
    for pc in pieces:
        for k, lvl in enumerate(pc.levels(), 1):
            g = face_group(K, f"step {pc.step} level {k}", [pair(u, v) for u, v in lvl])
            if g is None:
                return None
            out.append(g)
    return out


@lru_cache(maxsize=32)
def layered_layout(blocks: tuple[tuple[int, ...], ...]) -> Layout:
    """Geometry for slot blocks given as clique sizes per block (in slot order).

    ``((1,), (1,), ...)`` is the general case; a block ``(3, 2)`` is a color
    class holding a triangle followed by an edge.
    """
    block_of = [b for b, sizes in enumerate(blocks) for _ in range(sum(sizes))]
    n = len(block_of)
    if n == 1:
        return Layout(1, (Point(mpq(0), mpq(0)),), [], [], [])
    if len(blocks) == 1:
        x, ys, pieces, epsilons, alpha = [mpq(0)] * n, [mpq(s) for s in range(n)], [], [], None
        cols = [tuple(range(n))]
    else:
        x, ys, pieces, epsilons, alpha, cols = _recurse(n, block_of, all(sum(b) == 1 for b in blocks))
    cliques_of_col = [blocks[block_of[c[0]]] for c in cols]
    specs = _fans(cols, cliques_of_col)
    bows = {}
    for c in cols:
        for s, g in zip(c, _bow(len(c))):
            bows[s] = g
    top = max(bows.values(), default=0)
    xi = (epsilons[-1] if epsilons else mpq(1)) / (4 * top) if top else mpq(0)
    for _ in range(MAX_HALVINGS):
        pts = tuple(Point(x[s] + xi * bows[s], ys[s]) for s in range(n))
        if general_position(pts):
            K = Complete.build(pts)
            groups = _groups(K, pieces)
            fans = _seat_fans(pts, specs) if groups is not None else None
            if fans is not None:
                return Layout(n, pts, pieces, groups, fans, epsilons, alpha, xi)
        if not xi:
            break
        xi = halve(xi)
    raise RuntimeError("no admissible bowing of the final columns")


def _rep_from_layout(G: Graph, L: Layout, slot_of: Sequence[int], method: str) -> ObstacleRepresentation:
    vertex_of = {s: v for v, s in enumerate(slot_of)}
    placement = tuple(L.points[slot_of[v]] for v in range(G.n))
    obstacles, tags, rules = [], [], []
    for g in L.groups:
        chosen = [p for p in g.pairs if not G.has_edge(vertex_of[p[0]], vertex_of[p[1]])]
        if chosen:
            obstacles.append(g.obstacle(chosen))
            tags.append(g.tag)
            rules.append(Rule("face", frozenset(pair(vertex_of[a], vertex_of[b]) for a, b in chosen),
                              tuple(pair(vertex_of[a], vertex_of[b]) for a, b in g.pairs)))
    for f in L.fans:
        obstacles.append(f.obstacle)
        tags.append(f"O_{{{vertex_of[f.apex]}}}")
        rules.append(Rule("fan", frozenset(pair(vertex_of[a], vertex_of[b]) for a, b in f.targets),
                          (vertex_of[f.apex], vertex_of[f.first], vertex_of[f.last], f.lam)))
    meta = {"method": method, "epsilons": list(L.epsilons), "alpha": L.alpha, "xi": L.xi}
    return ObstacleRepresentation(placement, obstacles, tags, rules, meta)


def represent_general(G: Graph, assignment: Sequence[int] | None = None) -> ObstacleRepresentation:
    """``assignment[v]`` is the slot (bottom-up position) of vertex v."""
    if assignment is None:
        assignment = list(range(G.n))
    if sorted(assignment) != list(range(G.n)):
        raise ValueError("assignment is not a bijection onto 0..n-1")
    L = layered_layout(tuple((1,) for _ in range(G.n)))
    return _rep_from_layout(G, L, assignment, "general")


def represent_subcolored(G: Graph, c: Subcoloring) -> ObstacleRepresentation:
    c.validate(G)
    colors = sorted(set(c.color))
    order = sorted(range(G.n), key=lambda v: (c.color[v], c.clique[v], v))
    blocks = []
    for col in colors:
        members = [v for v in order if c.color[v] == col]
        sizes = []
        for q in sorted({c.clique[v] for v in members}):
            sizes.append(sum(1 for v in members if c.clique[v] == q))
        blocks.append(tuple(sizes))
    slot_of = [0] * G.n
    for s, v in enumerate(order):
        slot_of[v] = s
    L = layered_layout(tuple(blocks))
    rep = _rep_from_layout(G, L, slot_of, "subcolor")
    rep.meta["colors"] = len(colors)
    return rep


def _is_valid_addition(G: Graph, cls: list[list[int]], v: int) -> int | None:
    """Index of the clique of ``cls`` that ``v`` may join, ``len(cls)`` for a
    new clique, ``None`` if ``v`` cannot join this color class."""
    nbrs = G.neighbours(v)
    touched = [i for i, q in enumerate(cls) if nbrs & set(q)]
    if not touched:
        return len(cls)
    if len(touched) == 1 and set(cls[touched[0]]) <= nbrs:
        return touched[0]
    return None


def _greedy_sub(G: Graph) -> Subcoloring:
    classes: list[list[list[int]]] = []
    color, clique = [0] * G.n, [0] * G.n
    for v in range(G.n):
        for ci, cls in enumerate(classes):
            q = _is_valid_addition(G, cls, v)
            if q is not None:
                break
        else:
            classes.append([])
            ci, q = len(classes) - 1, 0
        cls = classes[ci]
        if q == len(cls):
            cls.append([])
        cls[q].append(v)
        color[v], clique[v] = ci, q
    return Subcoloring(tuple(color), tuple(clique))


def _greedy_proper(G: Graph) -> list[int]:
    color = [-1] * G.n
    for v in range(G.n):
        used = {color[u] for u in G.neighbours(v)}
        color[v] = next(k for k in range(G.n + 1) if k not in used)
    return color


def greedy_subcoloring(G: Graph) -> Subcoloring:
    """The best of a direct greedy subcoloring, a greedy proper coloring of
    ``G`` (singleton cliques) and a greedy coloring of the complement (one
    clique per class)."""
    options = [_greedy_sub(G)]
    col = _greedy_proper(G)
    options.append(Subcoloring(tuple(col), tuple(range(G.n))))
    col = _greedy_proper(G.complement())
    options.append(Subcoloring(tuple(col), tuple([0] * G.n)))
    return min(options, key=lambda s: s.num_colors)


__all__ = ["represent_general", "represent_subcolored", "greedy_subcoloring", "layered_layout",
           "band_height", "Layout", "Piece"]
