"""Graphs, subcolorings and obstacle representations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .geom import ConvexObstacle, Point

Pair = tuple[int, int]


def pair(u: int, v: int) -> Pair:
    if u == v:
        raise ValueError("loops are not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Pair]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        es = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} out of range")
            es.add(pair(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    def has_edge(self, u: int, v: int) -> bool:
        return pair(u, v) in self.edges

    def pairs(self) -> Iterable[Pair]:
        return itertools.combinations(range(self.n), 2)

    def non_edges(self) -> list[Pair]:
        return [p for p in self.pairs() if p not in self.edges]

    def complement(self) -> "Graph":
        return Graph(self.n, self.non_edges())

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def induced_is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(pair(a, b) in self.edges for a, b in itertools.combinations(vs, 2))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, itertools.combinations(range(n), 2))


@dataclass(frozen=True)
class Subcoloring:
    """``color[v]`` and ``clique[v]``: vertex v lies in clique ``clique[v]`` of
    color class ``color[v]``."""

    color: tuple[int, ...]
    clique: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.color))

    def classes(self) -> dict[tuple[int, int], list[int]]:
        out: dict[tuple[int, int], list[int]] = {}
        for v, (c, q) in enumerate(zip(self.color, self.clique)):
            out.setdefault((c, q), []).append(v)
        return out

    def validate(self, G: Graph) -> None:
        if len(self.color) != G.n or len(self.clique) != G.n:
            raise ValueError("subcoloring does not cover the vertex set")
        groups = self.classes()
        for vs in groups.values():
            if not G.induced_is_clique(vs):
                raise ValueError("a (color, clique) class is not a clique")
        for u, v in G.edges:
            if self.color[u] == self.color[v] and self.clique[u] != self.clique[v]:
                raise ValueError("two cliques of one color class are adjacent")


@dataclass(frozen=True)
class Rule:
    """How an obstacle was derived, so it can be rebuilt after a perturbation.

    kinds: ``face`` (hull of boundary-piece midpoints on a common bounded face),
    ``point`` (midpoint of one subdivision edge), ``arc`` (hull of consecutive
    chord midpoints of a convex chain plus its closing chord), ``fan`` (short
    segment across the chords from an apex), ``fixed`` (keep as is).
    """

    kind: str
    targets: frozenset[Pair]
    params: tuple = ()


@dataclass
class ObstacleRepresentation:
    placement: tuple[Point, ...]
    obstacles: list[ConvexObstacle] = field(default_factory=list)
    tags: list[str] = field(default_factory=list)
    rules: list[Rule] | None = None
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.placement)

    def __len__(self) -> int:
        return len(self.obstacles)

    @staticmethod
    def _relabel_param(x, inv):
        if isinstance(x, int):
            return inv[x]
        if isinstance(x, tuple):          # a pair of vertices
            return pair(inv[x[0]], inv[x[1]])
        return x

    def relabel(self, mapping: Mapping[int, int]) -> "ObstacleRepresentation":
        """Representation whose vertex ``v`` sits where ``mapping[v]`` sat."""
        placement = tuple(self.placement[mapping[v]] for v in range(self.n))
        inv = {s: v for v, s in mapping.items()}
        rules = None
        if self.rules is not None:
            rules = [Rule(r.kind, frozenset(pair(inv[a], inv[b]) for a, b in r.targets),
                          tuple(self._relabel_param(x, inv) for x in r.params))
                     for r in self.rules]
        return ObstacleRepresentation(placement, list(self.obstacles), list(self.tags), rules, dict(self.meta))


__all__ = ["Graph", "Subcoloring", "ObstacleRepresentation", "Rule", "Pair", "pair"]
