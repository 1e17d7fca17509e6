"""Boundary following: regions of triangles to polygons with holes.

- initialize: index a region's boundary half-edges
- select_edge: pick the continuation at a shared boundary point
- extract_linear_ring, extract_holes: consume the index into rings
- extract_polygon, extract_multipolygon: assemble polygons, run the pipeline
"""

from extraction.boundary import BoundaryIndex, initialize, select_edge
from extraction.polygons import (
    extract_multipolygon,
    extract_polygon,
    extract_region_rings,
)
from extraction.rings import extract_holes, extract_linear_ring

__all__ = [
    "BoundaryIndex",
    "extract_holes",
    "extract_linear_ring",
    "extract_multipolygon",
    "extract_polygon",
    "extract_region_rings",
    "initialize",
    "select_edge",
]
