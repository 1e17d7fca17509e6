"""Point-density heuristic for the alpha filter parameter."""

from errors import TooFewPointsError, ZeroAreaError
from geometry.point import PointSet


def point_density(ps: PointSet) -> float:
    """Points per unit area of the axis-aligned bounding box."""
    if len(ps) < 3:
        raise TooFewPointsError(f"density needs at least 3 points, got {len(ps)}")
    min_x, min_y, max_x, max_y = ps.bounds()
    area = (max_x - min_x) * (max_y - min_y)
    if area <= 0.0:
        raise ZeroAreaError("bounding box of the points has zero area")
    return len(ps) / area


def suggest_alpha(ps: PointSet) -> float:
    """alpha = 2 / density.

    This is a starting value, not an optimum. It carries area units rather
    than length units, so it scales with the square of the coordinates, and
    the bounding box stands in for the sampled area.
    """
    return 2.0 / point_density(ps)
