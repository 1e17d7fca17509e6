"""Reading point and geometry files; writing WKT, GeoJSON and SVG."""

from serialization.points import parse_csv, parse_geojson, parse_points
from serialization.readers import read_geometry
from serialization.writers import (
    geojson_geometry,
    serialize,
    to_geojson,
    to_svg,
    to_wkt,
)

__all__ = [
    "geojson_geometry",
    "parse_csv",
    "parse_geojson",
    "parse_points",
    "read_geometry",
    "serialize",
    "to_geojson",
    "to_svg",
    "to_wkt",
]
