"""MultiPolygon writers: WKT, GeoJSON and SVG.

Rings are stored open; every writer closes them by repeating the first
vertex. Extracted shells are counterclockwise and holes clockwise, which is
the GeoJSON winding, so coordinates are written in stored order.
"""

import json
from typing import Literal

from geometry.point import PointSet
from metrics.containment import multipolygon_bounds
from models import LinearRing, MultiPolygon, Polygon, SerializationConfig
from ui.styles import HOLE_ORANGE, SHELL_GREEN

OutputFormat = Literal["wkt", "geojson", "svg"]


def _fmt(value: float, precision: int) -> str:
    text = f"{value:.{precision}g}"
    return "0" if text == "-0" else text


def _ring_wkt(ring: LinearRing, ps: PointSet, precision: int) -> str:
    xs, ys = ps.xs, ps.ys
    pairs = (f"{_fmt(xs[i], precision)} {_fmt(ys[i], precision)}" for i in ring.closed())
    return "(" + ", ".join(pairs) + ")"


def _polygon_wkt(p: Polygon, ps: PointSet, precision: int) -> str:
    return "(" + ", ".join(_ring_wkt(r, ps, precision) for r in p.rings()) + ")"


def to_wkt(mp: MultiPolygon, ps: PointSet, precision: int = 9) -> str:
    """POLYGON for a single polygon, MULTIPOLYGON otherwise."""
    if mp.is_empty:
        return "MULTIPOLYGON EMPTY"
    if len(mp) == 1:
        return "POLYGON " + _polygon_wkt(mp.polygons[0], ps, precision)
    return "MULTIPOLYGON (" + ", ".join(
        _polygon_wkt(p, ps, precision) for p in mp.polygons
    ) + ")"


def _ring_coords(ring: LinearRing, ps: PointSet, precision: int) -> list[list[float]]:
    xs, ys = ps.xs, ps.ys
    return [
        [float(_fmt(xs[i], precision)), float(_fmt(ys[i], precision))]
        for i in ring.closed()
    ]


def geojson_geometry(mp: MultiPolygon, ps: PointSet, precision: int = 9) -> dict:
    """GeoJSON geometry object; an empty input gives an empty MultiPolygon."""
    polygons = [
        [_ring_coords(r, ps, precision) for r in p.rings()] for p in mp.polygons
    ]
    if len(polygons) == 1:
        return {"type": "Polygon", "coordinates": polygons[0]}
    return {"type": "MultiPolygon", "coordinates": polygons}


def to_geojson(mp: MultiPolygon, ps: PointSet, precision: int = 9) -> str:
    feature = {
        "type": "Feature",
        "properties": {"polygons": len(mp), "holes": mp.n_holes},
        "geometry": geojson_geometry(mp, ps, precision),
    }
    return json.dumps(feature)


def _ring_path(ring: LinearRing, ps: PointSet) -> str:
    xs, ys = ps.xs, ps.ys
    steps = [f"{xs[i]:.6g},{-ys[i]:.6g}" for i in ring.indices]
    return "M" + " L".join(steps) + " Z"


def to_svg(mp: MultiPolygon, ps: PointSet, cfg: SerializationConfig | None = None) -> str:
    """Filled shells with holes cut out by the even-odd rule.

    The y axis is flipped so the drawing matches the coordinate frame.
    """
    cfg = cfg or SerializationConfig()
    if mp.is_empty:
        min_x, min_y, max_x, max_y = 0.0, 0.0, 1.0, 1.0
    else:
        min_x, min_y, max_x, max_y = multipolygon_bounds(mp, ps)

    span_x = max(max_x - min_x, 1e-12)
    span_y = max(max_y - min_y, 1e-12)
    margin = cfg.svg_margin * max(span_x, span_y)
    view = (min_x - margin, -max_y - margin, span_x + 2 * margin, span_y + 2 * margin)
    width = cfg.svg_width
    height = width * view[3] / view[2]
    stroke = 0.002 * max(view[2], view[3])

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width:.6g}" height="{height:.6g}" '
        f'viewBox="{" ".join(f"{v:.6g}" for v in view)}">'
    ]
    for p in mp.polygons:
        d = " ".join(_ring_path(r, ps) for r in p.rings())
        parts.append(
            f'<path d="{d}" fill="{SHELL_GREEN}" fill-opacity="0.6" fill-rule="evenodd" '
            f'stroke="{SHELL_GREEN}" stroke-width="{stroke:.6g}"/>'
        )
        for hole in p.holes:
            parts.append(
                f'<path d="{_ring_path(hole, ps)}" fill="none" '
                f'stroke="{HOLE_ORANGE}" stroke-width="{stroke:.6g}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def serialize(
    mp: MultiPolygon,
    ps: PointSet,
    fmt: OutputFormat,
    cfg: SerializationConfig | None = None,
) -> bytes:
    cfg = cfg or SerializationConfig()
    if fmt == "wkt":
        text = to_wkt(mp, ps, cfg.precision) + "\n"
    elif fmt == "geojson":
        text = to_geojson(mp, ps, cfg.precision) + "\n"
    elif fmt == "svg":
        text = to_svg(mp, ps, cfg)
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    return text.encode("utf-8")
