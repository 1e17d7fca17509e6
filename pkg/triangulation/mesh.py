"""Half-edge mesh produced by the Delaunay triangulation.

Half-edge ``he`` belongs to triangle ``he // 3``. ``triangles[he]`` is the
point index of the half-edge's origin and ``halfedges[he]`` is the opposite
half-edge in the adjacent triangle, or NONE on the convex hull. Every
triangle is counterclockwise, so a triangle's interior lies to the left of
each of its half-edges.
"""

from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict

from geometry.point import Point, PointSet

NONE = -1


def next_halfedge(he: int) -> int:
    """Successor of ``he`` inside its triangle."""
    return 3 * (he // 3) + (he + 1) % 3


def prev_halfedge(he: int) -> int:
    return 3 * (he // 3) + (he + 2) % 3


def triangle_of(he: int) -> int:
    return he // 3


class HalfEdgeMesh(BaseModel):
    """Immutable Delaunay mesh over a borrowed PointSet."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: PointSet
    triangles: np.ndarray
    halfedges: np.ndarray
    hull: list[int]

    @property
    def triangle_count(self) -> int:
        return int(self.triangles.shape[0]) // 3

    @cached_property
    def triangles_list(self) -> list[int]:
        """``triangles`` as a plain list, for scalar traversal loops."""
        return self.triangles.tolist()

    @cached_property
    def halfedges_list(self) -> list[int]:
        return self.halfedges.tolist()

    def halfedge_origin(self, he: int) -> int:
        return self.triangles_list[he]

    def halfedge_destination(self, he: int) -> int:
        return self.triangles_list[next_halfedge(he)]

    def halfedge_vector(self, he: int) -> tuple[float, float]:
        """Direction of ``he`` from its origin to its destination."""
        xs, ys = self.points.xs, self.points.ys
        a = self.halfedge_origin(he)
        b = self.halfedge_destination(he)
        return (xs[b] - xs[a], ys[b] - ys[a])

    def triangle_points(self, t: int) -> tuple[int, int, int]:
        """Point indices of triangle ``t`` in counterclockwise order."""
        tri = self.triangles_list
        return (tri[3 * t], tri[3 * t + 1], tri[3 * t + 2])

    def triangle_coords(self, t: int) -> tuple[Point, Point, Point]:
        a, b, c = self.triangle_points(t)
        return (self.points[a], self.points[b], self.points[c])

    def vertex_array(self) -> np.ndarray:
        """(k, 3, 2) array of triangle corner coordinates."""
        return self.points.xy[self.triangles.reshape(-1, 3)]

    def dump(self) -> list[str]:
        """Debug lines ``he, triangles[he], halfedges[he]`` (NONE as -1)."""
        return [
            f"{he}, {origin}, {opposite}"
            for he, (origin, opposite) in enumerate(
                zip(self.triangles_list, self.halfedges_list)
            )
        ]
