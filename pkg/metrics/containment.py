"""Point membership and areas for polygons with holes.

Membership is the crossing-number (even-odd) rule over the shell and all
holes together, with points on any ring counted as inside.
"""

import numpy as np

from geometry.point import Point, PointSet
from geometry.predicates import orient2d_xy
from geometry.primitives import on_segment, signed_area
from models import LinearRing, MultiPolygon, Polygon


def point_in_polygon(pt: Point, p: Polygon, ps: PointSet) -> bool:
    """Exact membership of ``pt`` in ``p``; boundary points are inside."""
    xs, ys = ps.xs, ps.ys
    px, py = pt[0], pt[1]
    inside = False
    for ring in p.rings():
        for i, j in ring.segments():
            ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
            side = orient2d_xy(ax, ay, bx, by, px, py)
            if side == 0 and on_segment((ax, ay), (bx, by), (px, py)):
                return True
            # Half-open rule on y: an edge counts once at a shared vertex.
            if ay <= py < by and side > 0:
                inside = not inside
            elif by <= py < ay and side < 0:
                inside = not inside
    return inside


def _ring_edges(rings: list[LinearRing], ps: PointSet) -> np.ndarray:
    """(m, 4) array of edge endpoints (ax, ay, bx, by) over all rings."""
    chunks = []
    for ring in rings:
        idx = np.asarray(ring.indices, dtype=np.int64)
        a = ps.xy[idx]
        b = ps.xy[np.roll(idx, -1)]
        chunks.append(np.hstack([a, b]))
    if not chunks:
        return np.empty((0, 4))
    return np.vstack(chunks)


def points_in_polygon(p: Polygon, ps: PointSet, xy: np.ndarray) -> np.ndarray:
    """Vectorized membership of each row of ``xy`` in ``p``.

    Boundary detection is done in floating point, which is exact for
    axis-aligned edges and has measure zero elsewhere.
    """
    px = xy[:, 0]
    py = xy[:, 1]
    inside = np.zeros(xy.shape[0], dtype=bool)
    boundary = np.zeros(xy.shape[0], dtype=bool)

    for ax, ay, bx, by in _ring_edges(p.rings(), ps):
        cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        boundary |= (
            (cross == 0.0)
            & (np.minimum(ax, bx) <= px)
            & (px <= np.maximum(ax, bx))
            & (np.minimum(ay, by) <= py)
            & (py <= np.maximum(ay, by))
        )
        upward = (ay <= py) & (py < by) & (cross > 0.0)
        downward = (by <= py) & (py < ay) & (cross < 0.0)
        inside ^= upward | downward

    return inside | boundary


def points_in_multipolygon(mp: MultiPolygon, ps: PointSet, xy: np.ndarray) -> np.ndarray:
    """Membership of each row of ``xy`` in any polygon of ``mp``."""
    xy = np.asarray(xy, dtype=np.float64).reshape(-1, 2)
    result = np.zeros(xy.shape[0], dtype=bool)
    for p in mp.polygons:
        lo, hi = polygon_bounds(p, ps)
        box = (
            (xy[:, 0] >= lo[0]) & (xy[:, 0] <= hi[0]) & (xy[:, 1] >= lo[1]) & (xy[:, 1] <= hi[1])
        )
        if box.any():
            result[box] |= points_in_polygon(p, ps, xy[box])
    return result


def polygon_bounds(p: Polygon, ps: PointSet) -> tuple[np.ndarray, np.ndarray]:
    shell = ps.xy[np.asarray(p.shell.indices, dtype=np.int64)]
    return shell.min(axis=0), shell.max(axis=0)


def multipolygon_bounds(mp: MultiPolygon, ps: PointSet) -> tuple[float, float, float, float]:
    """(min_x, min_y, max_x, max_y) over all shells."""
    if mp.is_empty:
        raise ValueError("an empty multipolygon has no bounds")
    los, his = zip(*(polygon_bounds(p, ps) for p in mp.polygons))
    lo = np.min(los, axis=0)
    hi = np.max(his, axis=0)
    return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])


def polygon_area(p: Polygon, ps: PointSet) -> float:
    """Shell area minus hole areas."""
    return abs(signed_area(p.shell, ps)) - sum(abs(signed_area(h, ps)) for h in p.holes)


def multipolygon_area(mp: MultiPolygon, ps: PointSet) -> float:
    return sum(polygon_area(p, ps) for p in mp.polygons)
