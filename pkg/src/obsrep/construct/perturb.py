"""Perturb a representation into general position without changing what it blocks."""
from __future__ import annotations

import logging

from ..geom import HALF, Point, mpq, point_in_convex
from ..model import ObstacleRepresentation
from ..verify import hit_lists
from .common import Complete, general_position, rebuild_obstacle

log = logging.getLogger(__name__)


def _blocked(rep: ObstacleRepresentation) -> set:
    return {p for p, hits in hit_lists(rep).items() if hits}


def ensure_general_position(rep: ObstacleRepresentation, start: mpq = HALF,
                            max_halvings: int = 120) -> ObstacleRepresentation:
    """Move vertex i by (xi*i, xi*i^2) for the largest tried xi that leaves no
    three vertices collinear and blocks exactly the same pairs.

    Obstacles with a recorded rule are rebuilt on the new placement; others
    are kept as they are.
    """
    if general_position(rep.placement):
        return rep
    want = _blocked(rep)
    needs_K = rep.rules is not None and any(r.kind in ("face", "point") for r in rep.rules)
    xi = start
    for _ in range(max_halvings):
        pts = tuple(Point(p.x + xi * i, p.y + xi * i * i) for i, p in enumerate(rep.placement))
        if general_position(pts):
            K = Complete.build(pts) if needs_K else None
            if rep.rules is None:
                obstacles = list(rep.obstacles)
            else:
                obstacles = [rebuild_obstacle(r, pts, K) or (old if r.kind == "fixed" else None)
                             for r, old in zip(rep.rules, rep.obstacles)]
            if all(o is not None for o in obstacles):
                cand = ObstacleRepresentation(pts, obstacles, list(rep.tags), rep.rules,
                                              dict(rep.meta, perturbation=xi))
                if (not any(point_in_convex(o, q) for o in obstacles for q in pts)
                        and _blocked(cand) == want):
                    log.info("perturbed into general position with xi=%s", xi)
                    return cand
        xi *= HALF
    raise RuntimeError("no admissible perturbation found")


__all__ = ["ensure_general_position"]
