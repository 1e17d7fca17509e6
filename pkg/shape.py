"""Triangle filtering and region growing.

``filter_triangles`` keeps the triangles that satisfy the FilterConfig
criteria; ``extract_regions`` groups the kept triangles into maximal
edge-connected regions.
"""

import logging
from collections import deque
from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict

from models import FilterConfig
from triangulation.mesh import NONE, HalfEdgeMesh

logger = logging.getLogger(__name__)


class FilteredSet(BaseModel):
    """One flag per mesh triangle; True means the triangle is retained."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bits: np.ndarray

    def __len__(self) -> int:
        return int(self.bits.shape[0])

    @property
    def count(self) -> int:
        return int(self.bits.sum())

    def retained(self) -> list[int]:
        return np.flatnonzero(self.bits).tolist()

    @cached_property
    def flags(self) -> list[bool]:
        return self.bits.tolist()


class RegionSet(BaseModel):
    """Disjoint edge-connected groups of retained triangle ids."""

    regions: list[list[int]]

    def __len__(self) -> int:
        return len(self.regions)

    @property
    def triangle_total(self) -> int:
        return sum(len(r) for r in self.regions)


def _edge_vectors(mesh: HalfEdgeMesh) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    corners = mesh.vertex_array()
    ab = corners[:, 1] - corners[:, 0]
    bc = corners[:, 2] - corners[:, 1]
    ca = corners[:, 0] - corners[:, 2]
    return ab, bc, ca


def max_edge_lengths_sq(mesh: HalfEdgeMesh) -> np.ndarray:
    """Squared length of each triangle's longest edge."""
    ab, bc, ca = _edge_vectors(mesh)
    lengths = np.stack(
        [(ab * ab).sum(axis=1), (bc * bc).sum(axis=1), (ca * ca).sum(axis=1)]
    )
    return lengths.max(axis=0)


def circumradii_sq(mesh: HalfEdgeMesh) -> np.ndarray:
    """Squared circumradius of each triangle, +inf where the area vanishes.

    Uses R^2 = |ab|^2 |bc|^2 |ca|^2 / (4 cross^2), which avoids square roots.
    """
    ab, bc, ca = _edge_vectors(mesh)
    cross = ab[:, 0] * (-ca[:, 1]) - ab[:, 1] * (-ca[:, 0])
    num = (ab * ab).sum(axis=1) * (bc * bc).sum(axis=1) * (ca * ca).sum(axis=1)
    out = np.full(num.shape, np.inf)
    nonzero = cross != 0.0
    out[nonzero] = num[nonzero] / (4.0 * cross[nonzero] ** 2)
    return out


def filter_triangles(mesh: HalfEdgeMesh, cfg: FilterConfig) -> FilteredSet:
    """Retain triangles with circumradius <= alpha and longest edge <= l_max.

    Both comparisons are made on squared values. Unset criteria pass.
    """
    keep = np.ones(mesh.triangle_count, dtype=bool)
    if cfg.alpha is not None:
        keep &= circumradii_sq(mesh) <= cfg.alpha * cfg.alpha
    if cfg.l_max is not None:
        keep &= max_edge_lengths_sq(mesh) <= cfg.l_max * cfg.l_max
    keep.setflags(write=False)

    logger.debug("retained %d of %d triangles", int(keep.sum()), keep.shape[0])
    return FilteredSet(bits=keep)


def extract_regions(
    mesh: HalfEdgeMesh, fs: FilteredSet, min_region_size: int = 1
) -> RegionSet:
    """Flood-fill retained triangles across shared edges.

    Seeds are taken in ascending triangle id order, and each region lists its
    triangles in visit order. Regions with fewer than ``min_region_size``
    triangles are dropped after the fill.
    """
    if len(fs) != mesh.triangle_count:
        raise ValueError(
            f"filtered set has {len(fs)} flags for {mesh.triangle_count} triangles"
        )

    halfedges = mesh.halfedges_list
    keep = fs.flags
    visited = [False] * len(keep)
    regions: list[list[int]] = []
    dropped = 0

    for seed in fs.retained():
        if visited[seed]:
            continue
        visited[seed] = True
        region = []
        queue = deque([seed])
        while queue:
            t = queue.popleft()
            region.append(t)
            for he in (3 * t, 3 * t + 1, 3 * t + 2):
                opposite = halfedges[he]
                if opposite == NONE:
                    continue
                neighbor = opposite // 3
                if keep[neighbor] and not visited[neighbor]:
                    visited[neighbor] = True
                    queue.append(neighbor)

        if len(region) >= min_region_size:
            regions.append(region)
        else:
            dropped += 1

    logger.debug("found %d regions (%d below minimum size)", len(regions), dropped)
    return RegionSet(regions=regions)
