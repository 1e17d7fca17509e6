"""Geometry file reader used by the ``validate`` command.

shapely parses the WKT or GeoJSON; rings are then re-indexed against a
PointSet of the distinct coordinates so the audit sees them exactly as
written, winding included.
"""

import json
from pathlib import Path

import shapely
import shapely.geometry
import shapely.wkt
from shapely.errors import GEOSException, ShapelyError

from errors import GeometryParseError
from geometry.point import PointSet
from models import LinearRing, MultiPolygon, Polygon


def _load_geojson(text: str) -> list[shapely.Geometry]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GeometryParseError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None

    if isinstance(doc, dict) and doc.get("type") == "FeatureCollection":
        geometries = [f.get("geometry") for f in doc.get("features") or []]
    elif isinstance(doc, dict) and doc.get("type") == "Feature":
        geometries = [doc.get("geometry")]
    else:
        geometries = [doc]

    shapes = []
    for k, geometry in enumerate(geometries):
        try:
            shapes.append(shapely.geometry.shape(geometry))
        except (ShapelyError, GEOSException, ValueError, TypeError, AttributeError) as exc:
            raise GeometryParseError(f"feature {k}: {exc}") from None
    return shapes


def _load_wkt(text: str) -> list[shapely.Geometry]:
    try:
        return [shapely.wkt.loads(text)]
    except (ShapelyError, GEOSException) as exc:
        raise GeometryParseError(f"invalid WKT: {exc}") from None


class _Indexer:
    """Assigns one point index per distinct coordinate."""

    def __init__(self):
        self.index: dict[tuple[float, float], int] = {}

    def ring(self, coords) -> LinearRing:
        pts = [(float(x), float(y)) for x, y, *_ in coords]
        if len(pts) > 1 and pts[0] == pts[-1]:
            pts.pop()
        return LinearRing(indices=[self.index.setdefault(pt, len(self.index)) for pt in pts])

    def points(self) -> PointSet:
        return PointSet.from_points(self.index.keys())


def read_geometry(path: Path | str) -> tuple[MultiPolygon, PointSet]:
    """Read Polygon / MultiPolygon geometry from a WKT or GeoJSON file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GeometryParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise GeometryParseError(f"{path} is not UTF-8 text (bad byte at offset {exc.start})") from None

    stripped = text.lstrip()
    shapes = _load_geojson(text) if stripped.startswith("{") else _load_wkt(text)

    indexer = _Indexer()
    polygons = []
    for geom in shapes:
        if geom.geom_type == "Polygon":
            parts = [geom]
        elif geom.geom_type == "MultiPolygon":
            parts = list(geom.geoms)
        else:
            raise GeometryParseError(f"expected Polygon or MultiPolygon, got {geom.geom_type}")
        for part in parts:
            if part.is_empty:
                continue
            polygons.append(
                Polygon(
                    shell=indexer.ring(part.exterior.coords),
                    holes=[indexer.ring(r.coords) for r in part.interiors],
                )
            )

    return MultiPolygon(polygons=polygons), indexer.points()
