"""Lossless JSON encoding.  Scalars are written as "num/den" strings."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .drawing import BipartiteDrawing
from .geom import ConvexObstacle, Point, Q, Scalar, mpq, scalar_str
from .model import Graph, ObstacleRepresentation, Rule, Subcoloring

_KIND = {1: "point", 2: "segment"}


def _pt(p: Point) -> list[str]:
    return [scalar_str(p.x), scalar_str(p.y)]


def _parse_pt(v) -> Point:
    x, y = v
    return Point(Q(x), Q(y))


def plain(value: Any) -> Any:
    """Recursively replace exact scalars by strings so ``json`` can write them."""
    if isinstance(value, Scalar):
        return scalar_str(value)
    if isinstance(value, Point):
        return _pt(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in sorted(G.edges)]}


def graph_from_json(d: dict) -> Graph:
    return Graph(int(d["n"]), [tuple(e) for e in d.get("edges", [])])


def subcoloring_from_json(d: dict) -> Subcoloring:
    return Subcoloring(tuple(d["color"]), tuple(d["clique"]))


def drawing_to_json(D: BipartiteDrawing) -> dict:
    out = {"m": D.m, "n": D.n, "w": scalar_str(D.w),
           "P": [_pt(p) for p in D.P], "Q": [_pt(q) for q in D.Q]}
    if D.epsilon is not None:
        out["epsilon"] = scalar_str(D.epsilon)
    return out


def drawing_from_json(d: dict) -> BipartiteDrawing:
    eps = d.get("epsilon")
    return BipartiteDrawing(int(d["m"]), int(d["n"]), Q(d["w"]),
                            tuple(_parse_pt(p) for p in d["P"]), tuple(_parse_pt(q) for q in d["Q"]),
                            None if eps is None else Q(eps))


def _rule_to_json(r: Rule) -> dict:
    params = [scalar_str(p) if isinstance(p, Scalar) else list(p) if isinstance(p, tuple) else p
              for p in r.params]
    return {"kind": r.kind, "targets": [list(t) for t in sorted(r.targets)], "params": params}


def _rule_from_json(d: dict) -> Rule:
    params = tuple(Q(p) if isinstance(p, str) else tuple(p) if isinstance(p, list) else p
                   for p in d.get("params", []))
    return Rule(d["kind"], frozenset(tuple(t) for t in d["targets"]), params)


def rep_to_json(rep: ObstacleRepresentation) -> dict:
    out = {
        "placement": [_pt(p) for p in rep.placement],
        "obstacles": [{"kind": _KIND.get(len(o.vertices), "polygon"),
                       "vertices": [_pt(v) for v in o.vertices]} for o in rep.obstacles],
        "tags": list(rep.tags),
    }
    if rep.rules is not None:
        out["rules"] = [_rule_to_json(r) for r in rep.rules]
    if rep.meta:
        out["meta"] = plain(rep.meta)
    return out


def rep_from_json(d: dict) -> ObstacleRepresentation:
    placement = tuple(_parse_pt(p) for p in d["placement"])
    obstacles = [ConvexObstacle(tuple(_parse_pt(v) for v in o["vertices"])) for o in d.get("obstacles", [])]
    tags = list(d.get("tags", [""] * len(obstacles)))
    rules = [_rule_from_json(r) for r in d["rules"]] if "rules" in d else None
    return ObstacleRepresentation(placement, obstacles, tags, rules, dict(d.get("meta", {})))


def load(path: str | Path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dump(obj: dict, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


__all__ = [
    "plain", "graph_to_json", "graph_from_json", "subcoloring_from_json", "drawing_to_json",
    "drawing_from_json", "rep_to_json", "rep_from_json", "load", "dump", "mpq",
]
