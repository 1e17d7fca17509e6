"""Areas, circumradii, angles and the convex hull."""

import math
from typing import Sequence

from errors import DegenerateInputError, TooFewPointsError
from geometry.point import Point, PointSet
from geometry.predicates import orient2d_xy
from models import LinearRing

TWO_PI = 2.0 * math.pi


def _ring_indices(ring: LinearRing | Sequence[int]) -> Sequence[int]:
    return ring.indices if isinstance(ring, LinearRing) else ring


def signed_area(ring: LinearRing | Sequence[int], ps: PointSet) -> float:
    """Shoelace area of the closed ring; positive for counterclockwise winding.

    The cross terms are summed with fsum, so reversing a ring negates the
    result exactly.
    """
    indices = _ring_indices(ring)
    xs, ys = ps.xs, ps.ys
    n = len(indices)
    terms = []
    for k in range(n):
        i = indices[k]
        j = indices[(k + 1) % n]
        terms.append(xs[i] * ys[j] - xs[j] * ys[i])
    return 0.5 * math.fsum(terms)


def circumradius_sq(a: Point, b: Point, c: Point) -> float:
    """Squared circumradius of triangle abc; +inf when abc is degenerate."""
    if orient2d_xy(a[0], a[1], b[0], b[1], c[0], c[1]) == 0:
        return math.inf
    abx, aby = b[0] - a[0], b[1] - a[1]
    acx, acy = c[0] - a[0], c[1] - a[1]
    bcx, bcy = c[0] - b[0], c[1] - b[1]
    cross = abx * acy - aby * acx
    if cross == 0.0:
        return math.inf
    ab2 = abx * abx + aby * aby
    ac2 = acx * acx + acy * acy
    bc2 = bcx * bcx + bcy * bcy
    return (ab2 * ac2 * bc2) / (4.0 * cross * cross)


def ccw_angle(v_ref: tuple[float, float], v_cand: tuple[float, float]) -> float:
    """Counterclockwise rotation in [0, 2*pi) carrying v_ref onto v_cand."""
    if (v_ref[0] == 0.0 and v_ref[1] == 0.0) or (
        v_cand[0] == 0.0 and v_cand[1] == 0.0
    ):
        raise ValueError("ccw_angle is undefined for a zero vector")
    dot = v_ref[0] * v_cand[0] + v_ref[1] * v_cand[1]
    det = v_ref[0] * v_cand[1] - v_ref[1] * v_cand[0]
    angle = math.atan2(det, dot)
    if angle < 0.0:
        angle += TWO_PI
        if angle >= TWO_PI:
            angle = 0.0
    return angle


def convex_hull(ps: PointSet, indices: Sequence[int] | None = None) -> LinearRing:
    """Counterclockwise hull ring of the extreme points (monotone chain).

    Collinear boundary points are dropped. With ``indices`` only that subset
    of the set is hulled. The ring starts at the lexicographically smallest
    point.
    """
    xs, ys = ps.xs, ps.ys
    candidates = list(range(len(ps))) if indices is None else list(dict.fromkeys(indices))
    if len(candidates) < 3:
        raise TooFewPointsError(
            f"convex hull needs at least 3 points, got {len(candidates)}"
        )

    candidates.sort(key=lambda i: (xs[i], ys[i]))

    def build(order: list[int]) -> list[int]:
        chain: list[int] = []
        for i in order:
            while len(chain) >= 2 and (
                orient2d_xy(
                    xs[chain[-2]], ys[chain[-2]], xs[chain[-1]], ys[chain[-1]], xs[i], ys[i]
                )
                <= 0
            ):
                chain.pop()
            chain.append(i)
        return chain

    lower = build(candidates)
    upper = build(candidates[::-1])
    hull = lower[:-1] + upper[:-1]

    if len(hull) < 3:
        raise DegenerateInputError("all points are collinear; the hull is degenerate")
    return LinearRing(indices=hull)


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True when p lies on the closed segment ab."""
    if orient2d_xy(a[0], a[1], b[0], b[1], p[0], p[1]) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """True when closed segments p1p2 and p3p4 share at least one point."""
    d1 = orient2d_xy(p3[0], p3[1], p4[0], p4[1], p1[0], p1[1])
    d2 = orient2d_xy(p3[0], p3[1], p4[0], p4[1], p2[0], p2[1])
    d3 = orient2d_xy(p1[0], p1[1], p2[0], p2[1], p3[0], p3[1])
    d4 = orient2d_xy(p1[0], p1[1], p2[0], p2[1], p4[0], p4[1])

    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and on_segment(p3, p4, p1):
        return True
    if d2 == 0 and on_segment(p3, p4, p2):
        return True
    if d3 == 0 and on_segment(p1, p2, p3):
        return True
    if d4 == 0 and on_segment(p1, p2, p4):
        return True
    return False
