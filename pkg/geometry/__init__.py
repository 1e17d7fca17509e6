"""Foundational 2D geometry.

- Point, PointSet: immutable input points addressed by point index
- orient2d, incircle: exact-sign predicates with a floating-point filter
- signed_area, circumradius_sq, ccw_angle: scalar measures
- convex_hull, segments_intersect, on_segment: hull and segment tests
"""

from geometry.point import Point, PointSet
from geometry.predicates import Sign, incircle, incircle_xy, orient2d, orient2d_xy
from geometry.primitives import (
    ccw_angle,
    circumradius_sq,
    convex_hull,
    on_segment,
    segments_intersect,
    signed_area,
)

__all__ = [
    "Point",
    "PointSet",
    "Sign",
    "ccw_angle",
    "circumradius_sq",
    "convex_hull",
    "incircle",
    "incircle_xy",
    "on_segment",
    "orient2d",
    "orient2d_xy",
    "segments_intersect",
    "signed_area",
]
