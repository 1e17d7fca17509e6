"""Ring following over the boundary half-edges of a region."""

import logging

from errors import CorruptBoundaryError
from extraction.boundary import BoundaryIndex, select_edge
from models import LinearRing
from triangulation.mesh import HalfEdgeMesh, next_halfedge

logger = logging.getLogger(__name__)


def extract_linear_ring(
    bi: BoundaryIndex,
    start_he: int,
    start_pi: int,
    mesh: HalfEdgeMesh,
) -> LinearRing:
    """Follow boundary half-edges from ``start_he`` until ``start_pi`` recurs.

    Every traversed half-edge is removed from ``bi``. The ring is returned
    open, starting at ``start_pi``.
    """
    triangles = mesh.triangles_list
    if triangles[start_he] != start_pi:
        raise CorruptBoundaryError(
            f"half-edge {start_he} does not start at point {start_pi}"
        )

    ring = [start_pi]
    he = start_he
    budget = len(bi.he_set)

    for _ in range(budget):
        bi.remove(he, triangles[he])
        pi = triangles[next_halfedge(he)]
        if pi == start_pi:
            return LinearRing(indices=ring)
        ring.append(pi)
        he = select_edge(he, bi.pt_to_edges.get(pi, []), mesh)

    raise CorruptBoundaryError(
        f"ring from point {start_pi} did not close after {budget} half-edges"
    )


def extract_holes(bi: BoundaryIndex, mesh: HalfEdgeMesh) -> list[LinearRing]:
    """Extract rings until no boundary half-edge is left.

    Each ring starts from the smallest remaining half-edge id.
    """
    holes = []
    while bi.he_set:
        he = min(bi.he_set)
        holes.append(extract_linear_ring(bi, he, mesh.halfedge_origin(he), mesh))
    if holes:
        logger.debug("extracted %d holes", len(holes))
    return holes
