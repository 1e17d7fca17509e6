"""Evaluation of extracted polygons.

- validate_polygon: validity audit with a list of violations
- point_in_polygon, points_in_multipolygon: membership tests
- convexity, convexity_band: shell area over hull area
- l2_error: Monte-Carlo symmetric-difference error
- suggest_alpha: density-based alpha heuristic
- generate_random_polygon, sample_points_in_polygon: seeded fixtures
"""

from metrics.containment import (
    multipolygon_area,
    multipolygon_bounds,
    point_in_polygon,
    points_in_multipolygon,
    points_in_polygon,
    polygon_area,
)
from metrics.convexity import convexity, convexity_band
from metrics.density import point_density, suggest_alpha
from metrics.generators import (
    generate_random_polygon,
    sample_points_in_multipolygon,
    sample_points_in_polygon,
)
from metrics.shape_error import l2_error, make_rng
from metrics.validity import validate_polygon

__all__ = [
    "convexity",
    "convexity_band",
    "generate_random_polygon",
    "l2_error",
    "make_rng",
    "multipolygon_area",
    "multipolygon_bounds",
    "point_density",
    "point_in_polygon",
    "points_in_multipolygon",
    "points_in_polygon",
    "polygon_area",
    "sample_points_in_multipolygon",
    "sample_points_in_polygon",
    "suggest_alpha",
    "validate_polygon",
]
