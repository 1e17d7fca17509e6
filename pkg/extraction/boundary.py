"""Boundary half-edges of a region and the edge-selection rule."""

import logging
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from errors import CorruptBoundaryError
from geometry.primitives import ccw_angle
from shape import FilteredSet
from triangulation.mesh import NONE, HalfEdgeMesh

logger = logging.getLogger(__name__)

# Travel direction assumed when the shell starts at the extreme point.
START_DIRECTION = (0.0, 1.0)


class BoundaryIndex(BaseModel):
    """Boundary half-edges of one region, consumed as rings are extracted.

    ``pt_to_edges`` maps each boundary point index to the boundary
    half-edges that leave it. ``extreme_pi`` is the first boundary point
    found with the largest x coordinate.
    """

    he_set: set[int] = Field(default_factory=set)
    pt_to_edges: dict[int, list[int]] = Field(default_factory=dict)
    extreme_pi: int = -1

    def remove(self, he: int, origin: int) -> None:
        """Consume ``he``; it must still be present."""
        try:
            self.he_set.remove(he)
            self.pt_to_edges[origin].remove(he)
        except (KeyError, ValueError) as exc:
            raise CorruptBoundaryError(
                f"half-edge {he} was consumed twice or never indexed"
            ) from exc


def initialize(
    region: Sequence[int],
    mesh: HalfEdgeMesh,
    fs: FilteredSet | None = None,
) -> BoundaryIndex:
    """Index the boundary half-edges of ``region``.

    A half-edge is on the boundary when it has no opposite or its opposite's
    triangle is outside the region. Region membership is read from ``fs``
    when given; a retained neighbour of a region triangle always belongs to
    the same region. Without ``fs`` the region list itself is used.
    """
    tris = np.asarray(region, dtype=np.int64)
    hes = (3 * tris[:, None] + np.arange(3)).ravel()
    opposite = mesh.halfedges[hes]

    if fs is not None:
        member = fs.bits
    else:
        member = np.zeros(mesh.triangle_count, dtype=bool)
        member[tris] = True

    on_boundary = opposite == NONE
    inner = ~on_boundary
    on_boundary[inner] = ~member[opposite[inner] // 3]
    boundary = hes[on_boundary]
    origins = mesh.triangles[boundary]

    if boundary.size == 0:
        return BoundaryIndex()

    he_set = set(boundary.tolist())
    pt_to_edges: dict[int, list[int]] = {}
    for he, pi in zip(boundary.tolist(), origins.tolist()):
        pt_to_edges.setdefault(pi, []).append(he)
    extreme_pi = int(origins[np.argmax(mesh.points.xy[origins, 0])])

    return BoundaryIndex(he_set=he_set, pt_to_edges=pt_to_edges, extreme_pi=extreme_pi)


def select_edge(
    incoming_he: int | None,
    candidates: Sequence[int],
    mesh: HalfEdgeMesh,
) -> int:
    """Choose the outgoing boundary half-edge that continues a ring.

    The winner is the candidate reached first when sweeping counterclockwise
    from the reversed incoming direction, i.e. the sharpest right turn. That
    keeps the region on the left and the outside of the ring on the right,
    so rings that pinch at a shared vertex are split into separate loops.
    With ``incoming_he`` None the travel direction is START_DIRECTION.
    """
    if not candidates:
        raise CorruptBoundaryError(
            f"no outgoing boundary edge after half-edge {incoming_he}"
        )
    if len(candidates) == 1:
        return candidates[0]

    if incoming_he is None:
        dx, dy = START_DIRECTION
    else:
        dx, dy = mesh.halfedge_vector(incoming_he)
    back = (-dx, -dy)

    best = candidates[0]
    best_angle = -1.0
    for he in candidates:
        angle = ccw_angle(mesh.halfedge_vector(he), back)
        if angle > best_angle:
            best = he
            best_angle = angle
    logger.debug(
        "picked half-edge %d of %d candidates after %s", best, len(candidates), incoming_he
    )
    return best
