"""Point file readers: CSV (``x,y`` per line) and GeoJSON."""

import csv
import json
import math
from pathlib import Path
from typing import Any, Literal

from errors import PointParseError
from geometry.point import PointSet

PointFormat = Literal["csv", "geojson"]


def detect_format(path: Path) -> PointFormat:
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".geojson", ".json"):
        return "geojson"
    raise PointParseError(f"cannot infer point format from {path.name!r}; pass --format")


def _finite_pair(values: Any, **where) -> tuple[float, float]:
    if not isinstance(values, (list, tuple)) or len(values) != 2:
        raise PointParseError(f"expected an x, y pair, got {values!r}", **where)
    try:
        x, y = float(values[0]), float(values[1])
    except (TypeError, ValueError):
        raise PointParseError(f"non-numeric coordinate in {values!r}", **where) from None
    if not (math.isfinite(x) and math.isfinite(y)):
        raise PointParseError(f"non-finite coordinate ({x!r}, {y!r})", **where)
    return x, y


def _position(values: Any, **where) -> tuple[float, float]:
    """GeoJSON position; ordinates after x and y (elevation, measure) are dropped."""
    if isinstance(values, (list, tuple)) and len(values) > 2:
        values = values[:2]
    return _finite_pair(values, **where)


def _build(points: list[tuple[float, float]], where: list[dict]) -> PointSet:
    first_seen: dict[tuple[float, float], int] = {}
    for k, pt in enumerate(points):
        if pt in first_seen:
            original = where[first_seen[pt]]
            label = ", ".join(f"{key} {value}" for key, value in original.items())
            raise PointParseError(f"duplicate of the point at {label}", **where[k])
        first_seen[pt] = k
    return PointSet.from_points(points)


def parse_csv(text: str) -> PointSet:
    """One ``x,y`` pair per line; an ``x,y`` header line is optional."""
    points: list[tuple[float, float]] = []
    where: list[dict] = []
    header_checked = False

    for line_no, row in enumerate(csv.reader(text.splitlines()), start=1):
        cells = [c.strip() for c in row]
        if not cells or cells == [""]:
            continue
        if not header_checked:
            header_checked = True
            if [c.lower() for c in cells] == ["x", "y"]:
                continue
        points.append(_finite_pair(cells, line=line_no))
        where.append({"line": line_no})

    return _build(points, where)


def _feature_point(feature: Any, index: int) -> tuple[float, float]:
    if not isinstance(feature, dict) or feature.get("type") != "Feature":
        raise PointParseError("not a GeoJSON Feature", feature=index)
    geometry = feature.get("geometry") or {}
    if geometry.get("type") != "Point":
        raise PointParseError(
            f"expected Point geometry, got {geometry.get('type')!r}", feature=index
        )
    return _position(geometry.get("coordinates"), feature=index)


def parse_geojson(text: str) -> PointSet:
    """A MultiPoint geometry (bare or in a Feature) or a FeatureCollection
    of Point features."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PointParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise PointParseError("GeoJSON document must be an object")

    if doc.get("type") == "Feature":
        doc = doc.get("geometry") or {}

    kind = doc.get("type")
    if kind == "FeatureCollection":
        features = doc.get("features") or []
        points = [_feature_point(f, k) for k, f in enumerate(features)]
        where = [{"feature": k} for k in range(len(points))]
        return _build(points, where)
    if kind == "MultiPoint":
        coords = doc.get("coordinates") or []
        points = []
        for k, pair in enumerate(coords):
            try:
                points.append(_position(pair))
            except PointParseError as exc:
                raise PointParseError(f"coordinate {k}: {exc}") from None
        seen: dict[tuple[float, float], int] = {}
        for k, pt in enumerate(points):
            if pt in seen:
                raise PointParseError(f"coordinate {k}: duplicate of coordinate {seen[pt]}")
            seen[pt] = k
        return PointSet.from_points(points)
    raise PointParseError(f"unsupported GeoJSON type {kind!r}")


def parse_points(path: Path | str, fmt: PointFormat | None = None) -> PointSet:
    """Read a point file; ``fmt`` defaults to the file extension."""
    path = Path(path)
    fmt = fmt or detect_format(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PointParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise PointParseError(f"{path} is not UTF-8 text (bad byte at offset {exc.start})") from None
    if fmt == "csv":
        return parse_csv(text)
    return parse_geojson(text)
