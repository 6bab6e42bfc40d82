"""Exact obstacle representations of graphs and the segment-arrangement
machinery behind them."""
from .model import Graph, ObstacleRepresentation, Subcoloring
from .verify import Report, blocking_multiplicity, verify

__all__ = ["Graph", "ObstacleRepresentation", "Subcoloring", "Report", "verify", "blocking_multiplicity"]
