"""Delaunay triangulation on top of Qhull.

``scipy.spatial.Delaunay`` supplies the triangles and their neighbours. The
arrays are re-wound counterclockwise with the exact orientation predicate and
converted into the half-edge layout of HalfEdgeMesh. Qhull decides in floating
point, so a final pass re-checks every interior edge with the exact incircle
predicate and flips the few that are not locally Delaunay.
"""

import logging

import numpy as np
from scipy.spatial import Delaunay, QhullError

from errors import DegenerateInputError, TooFewPointsError
from geometry.point import PointSet
from geometry.predicates import incircle_signs, incircle_xy, orient2d_signs
from triangulation.mesh import NONE, HalfEdgeMesh

logger = logging.getLogger(__name__)


def _counterclockwise(xy: np.ndarray, simplices: np.ndarray, neighbors: np.ndarray):
    """Swap corners 1 and 2 of every clockwise simplex.

    ``neighbors[t, j]`` lies opposite corner j, so its columns swap too.
    """
    signs = orient2d_signs(xy, simplices[:, 0], simplices[:, 1], simplices[:, 2])
    flat = np.count_nonzero(signs == 0)
    if flat:
        logger.warning("Qhull returned %d zero-area triangles", flat)
    cw = signs < 0
    simplices[cw] = simplices[cw][:, [0, 2, 1]]
    neighbors[cw] = neighbors[cw][:, [0, 2, 1]]


def _to_halfedges(simplices: np.ndarray, neighbors: np.ndarray) -> np.ndarray:
    """Opposite half-edge of every half-edge, NONE on the hull.

    Half-edge ``3t + k`` runs from corner k to corner k+1 of triangle t, so
    the neighbour across it is the one opposite corner k+2. Its twin is the
    half-edge of that neighbour starting at corner k+1.
    """
    across = np.roll(neighbors, -2, axis=1).ravel()
    destination = np.roll(simplices, -1, axis=1).ravel()

    halfedges = np.full(across.shape[0], NONE, dtype=np.int64)
    inner = np.flatnonzero(across >= 0)
    u = across[inner]
    corner = np.argmax(simplices[u] == destination[inner, None], axis=1)
    halfedges[inner] = 3 * u + corner
    return halfedges


def _legalize(xy: np.ndarray, triangles: list[int], halfedges: list[int], stack: list[int]) -> int:
    """Flip edges until every edge on ``stack`` and its successors is Delaunay.

    Returns the number of flips.
    """
    xs = xy[:, 0].tolist()
    ys = xy[:, 1].tolist()

    def link(x: int, y: int) -> None:
        halfedges[x] = y
        if y != NONE:
            halfedges[y] = x

    flips = 0
    while stack:
        a = stack.pop()
        b = halfedges[a]
        if b == NONE:
            continue

        a0 = a - a % 3
        al = a0 + (a + 1) % 3
        ar = a0 + (a + 2) % 3
        b0 = b - b % 3
        br = b0 + (b + 1) % 3
        bl = b0 + (b + 2) % 3

        pr = triangles[a]
        pl = triangles[al]
        p0 = triangles[ar]
        p1 = triangles[bl]
        if incircle_xy(xs[pr], ys[pr], xs[pl], ys[pl], xs[p0], ys[p0], xs[p1], ys[p1]) <= 0:
            continue

        triangles[a] = p1
        triangles[b] = p0
        hbl = halfedges[bl]
        har = halfedges[ar]
        link(a, hbl)
        link(b, har)
        link(ar, bl)
        flips += 1
        stack.extend((a, al, b, br))
    return flips


def _walk_hull(triangles: np.ndarray, halfedges: np.ndarray) -> list[int]:
    """Hull point indices in counterclockwise order."""
    boundary = np.flatnonzero(halfedges == NONE)
    origin = triangles[boundary]
    following = 3 * (boundary // 3) + (boundary + 1) % 3
    leaving = dict(zip(origin.tolist(), boundary.tolist()))
    destination = dict(zip(boundary.tolist(), triangles[following].tolist()))

    start = int(boundary[0])
    hull: list[int] = []
    he = start
    while True:
        hull.append(int(triangles[he]))
        he = leaving[destination[he]]
        if he == start:
            return hull


def triangulate(ps: PointSet) -> HalfEdgeMesh:
    """Delaunay triangulation of ``ps`` as a counterclockwise half-edge mesh.

    Raises:
        TooFewPointsError: fewer than 3 points.
        DegenerateInputError: all points are collinear.
    """
    if len(ps) < 3:
        raise TooFewPointsError(f"triangulation needs at least 3 points, got {len(ps)}")

    xy = ps.xy
    try:
        qhull = Delaunay(xy)
    except QhullError as exc:
        raise DegenerateInputError(
            f"cannot triangulate {len(ps)} points: they are collinear"
        ) from exc

    if len(qhull.coplanar):
        logger.warning(
            "Qhull left %d near-coincident points out of the mesh", len(qhull.coplanar)
        )

    simplices = np.array(qhull.simplices, dtype=np.int64)
    neighbors = np.array(qhull.neighbors, dtype=np.int64)
    _counterclockwise(xy, simplices, neighbors)
    halfedges = _to_halfedges(simplices, neighbors)
    triangles = simplices.ravel()

    a = np.flatnonzero(halfedges > np.arange(halfedges.shape[0]))
    al = 3 * (a // 3) + (a + 1) % 3
    ar = 3 * (a // 3) + (a + 2) % 3
    b = halfedges[a]
    bl = 3 * (b // 3) + (b + 2) % 3
    illegal = incircle_signs(xy, triangles[a], triangles[al], triangles[ar], triangles[bl]) > 0
    suspects = a[illegal]

    if suspects.size:
        tri_list = triangles.tolist()
        twin_list = halfedges.tolist()
        flips = _legalize(xy, tri_list, twin_list, suspects.tolist())
        triangles = np.array(tri_list, dtype=np.int64)
        halfedges = np.array(twin_list, dtype=np.int64)
        logger.debug("exact pass flipped %d of %d suspect edges", flips, suspects.size)

    hull = _walk_hull(triangles, halfedges)
    for arr in (triangles, halfedges):
        arr.setflags(write=False)

    logger.debug(
        "triangulated %d points: %d triangles, %d hull points",
        len(ps),
        triangles.shape[0] // 3,
        len(hull),
    )
    return HalfEdgeMesh(points=ps, triangles=triangles, halfedges=halfedges, hull=hull)
