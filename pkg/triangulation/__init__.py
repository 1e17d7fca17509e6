"""Delaunay triangulation into a half-edge mesh."""

from triangulation.delaunay import triangulate
from triangulation.mesh import (
    NONE,
    HalfEdgeMesh,
    next_halfedge,
    prev_halfedge,
    triangle_of,
)

__all__ = [
    "NONE",
    "HalfEdgeMesh",
    "next_halfedge",
    "prev_halfedge",
    "triangle_of",
    "triangulate",
]
