"""Polygon assembly and the full extraction pipeline."""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from extraction.boundary import initialize, select_edge
from extraction.rings import extract_holes, extract_linear_ring
from geometry.point import PointSet
from models import (
    ExtractedRing,
    ExtractionReport,
    FilterConfig,
    MultiPolygon,
    Polygon,
    RingKind,
    StageTimings,
)
from shape import FilteredSet, extract_regions, filter_triangles
from triangulation.delaunay import triangulate
from triangulation.mesh import HalfEdgeMesh

logger = logging.getLogger(__name__)


def extract_region_rings(
    region: Sequence[int],
    mesh: HalfEdgeMesh,
    fs: FilteredSet | None = None,
) -> list[ExtractedRing]:
    """Shell ring first, then every hole ring of one region."""
    if not region:
        raise ValueError("cannot extract a polygon from an empty region")

    bi = initialize(region, mesh, fs)
    start_pi = bi.extreme_pi
    start_he = select_edge(None, bi.pt_to_edges[start_pi], mesh)

    shell = extract_linear_ring(bi, start_he, start_pi, mesh)
    rings = [ExtractedRing(ring=shell, kind=RingKind.SHELL)]
    rings.extend(
        ExtractedRing(ring=hole, kind=RingKind.HOLE) for hole in extract_holes(bi, mesh)
    )
    return rings


def extract_polygon(
    region: Sequence[int],
    mesh: HalfEdgeMesh,
    fs: FilteredSet | None = None,
) -> Polygon:
    rings = extract_region_rings(region, mesh, fs)
    return Polygon(shell=rings[0].ring, holes=[r.ring for r in rings[1:]])


def _ms(start: float, end: float) -> float:
    return round((end - start) * 1000.0, 3)


def extract_multipolygon(
    ps: PointSet,
    cfg: FilterConfig,
    workers: int | None = None,
) -> tuple[MultiPolygon, ExtractionReport]:
    """Triangulate, filter, grow regions and extract one polygon per region.

    With ``workers`` > 1 regions are extracted on a thread pool; the
    polygons keep region order either way.
    """
    start = time.perf_counter()
    mesh = triangulate(ps)
    after_triangulation = time.perf_counter()

    fs = filter_triangles(mesh, cfg)
    regions = extract_regions(mesh, fs, cfg.min_region_size)
    after_shape = time.perf_counter()

    if workers and workers > 1 and len(regions) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            polygons = list(
                pool.map(lambda region: extract_polygon(region, mesh, fs), regions.regions)
            )
    else:
        polygons = [extract_polygon(region, mesh, fs) for region in regions.regions]
    end = time.perf_counter()

    mp = MultiPolygon(polygons=polygons)
    report = ExtractionReport(
        n_points=len(ps),
        n_triangles=mesh.triangle_count,
        n_retained=fs.count,
        n_regions=len(regions),
        n_polygons=len(mp),
        n_holes=mp.n_holes,
        alpha=cfg.alpha,
        l_max=cfg.l_max,
        min_region_size=cfg.min_region_size,
        timings=StageTimings(
            triangulation_ms=_ms(start, after_triangulation),
            shape_extraction_ms=_ms(after_triangulation, after_shape),
            polygon_extraction_ms=_ms(after_shape, end),
            total_ms=_ms(start, end),
        ),
    )
    logger.info(
        "extracted %d polygons with %d holes from %d points in %.3f ms",
        report.n_polygons,
        report.n_holes,
        report.n_points,
        report.timings.total_ms,
    )
    return mp, report
