"""Expansion certification, expander extraction, and expander structure toolkit."""

from .graph import (
    INFINITE,
    BoundaryStats,
    Graph,
    VertexSet,
    ball,
    boundary,
    diameter,
    induce,
    subdivide,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "BoundaryStats",
    "Graph",
    "VertexSet",
    "ball",
    "boundary",
    "diameter",
    "induce",
    "subdivide",
    "__version__",
]
