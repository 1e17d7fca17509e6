"""Convexity of a polygon: shell area over the area of its convex hull."""

from typing import Literal

from errors import ZeroAreaError
from geometry.point import PointSet
from geometry.primitives import convex_hull, signed_area
from models import Polygon

ConvexityBand = Literal["hi", "mid", "low"]

HIGH_BAND = 0.75
LOW_BAND = 0.55


def convexity(p: Polygon, ps: PointSet) -> float:
    """Area(shell) / Area(convex hull of the shell vertices), in (0, 1].

    Holes are ignored: the metric describes the outline only.
    """
    hull = convex_hull(ps, p.shell.indices)
    hull_area = signed_area(hull, ps)
    if hull_area <= 0.0:
        raise ZeroAreaError("convex hull of the shell has no area")
    return min(1.0, abs(signed_area(p.shell, ps)) / hull_area)


def convexity_band(cv: float) -> ConvexityBand:
    if cv >= HIGH_BAND:
        return "hi"
    if cv >= LOW_BAND:
        return "mid"
    return "low"
