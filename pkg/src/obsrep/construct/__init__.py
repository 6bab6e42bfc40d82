"""Obstacle-representation constructors."""
from .bipartite import (bipartite_geometry, bipartition, represent_bipartite, represent_cobipartite,
                        represent_split, split_partition)
from .layered import greedy_subcoloring, layered_layout, represent_general, represent_subcolored
from .perturb import ensure_general_position

__all__ = [
    "represent_bipartite", "represent_cobipartite", "represent_split", "represent_general",
    "represent_subcolored", "greedy_subcoloring", "ensure_general_position", "bipartition",
    "split_partition", "bipartite_geometry", "layered_layout",
]
