"""Tests for triangle filtering and region growing."""

import numpy as np
import pytest

from geometry.point import PointSet
from geometry.primitives import circumradius_sq
from models import FilterConfig
from shape import (
    FilteredSet,
    circumradii_sq,
    extract_regions,
    filter_triangles,
    max_edge_lengths_sq,
)
from triangulation import NONE, triangulate


def union_find_components(mesh, fs: FilteredSet) -> list[set[int]]:
    """Independent connectivity oracle over retained triangles."""
    parent = list(range(mesh.triangle_count))

    def find(t: int) -> int:
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    bits = fs.bits.tolist()
    for he, twin in enumerate(mesh.halfedges_list):
        if twin == NONE:
            continue
        a, b = he // 3, twin // 3
        if bits[a] and bits[b]:
            parent[find(a)] = find(b)

    groups: dict[int, set[int]] = {}
    for t in fs.retained():
        groups.setdefault(find(t), set()).add(t)
    return list(groups.values())


class TestFilterConfig:
    """Tests for FilterConfig validation."""

    def test_requires_a_criterion(self):
        """Should reject a config without alpha and l_max."""
        with pytest.raises(ValueError):
            FilterConfig()

    def test_rejects_non_positive(self):
        """Should reject non-positive thresholds."""
        with pytest.raises(ValueError):
            FilterConfig(alpha=0.0)
        with pytest.raises(ValueError):
            FilterConfig(l_max=-1.0)
        with pytest.raises(ValueError):
            FilterConfig(alpha=1.0, min_region_size=0)


class TestFilterTriangles:
    """Tests for filter_triangles."""

    def test_lattice_keeps_unit_triangles(self, grid_3x3):
        """Should keep all eight unit triangles under l_max 1.5."""
        mesh = triangulate(grid_3x3)
        assert filter_triangles(mesh, FilterConfig(l_max=1.5)).count == 8

    def test_lattice_drops_diagonals(self, grid_3x3):
        """Should drop every triangle when l_max is below the diagonal."""
        mesh = triangulate(grid_3x3)
        assert filter_triangles(mesh, FilterConfig(l_max=1.2)).count == 0

    def test_alpha_on_lattice(self, grid_3x3):
        """Should keep unit triangles with circumradius sqrt(2)/2."""
        mesh = triangulate(grid_3x3)
        assert filter_triangles(mesh, FilterConfig(alpha=0.71)).count == 8
        assert filter_triangles(mesh, FilterConfig(alpha=0.70)).count == 0

    def test_both_criteria_must_pass(self, grid_3x3):
        """Should combine alpha and l_max with a logical and."""
        mesh = triangulate(grid_3x3)
        assert filter_triangles(mesh, FilterConfig(alpha=10.0, l_max=1.2)).count == 0

    @pytest.mark.parametrize("field", ["alpha", "l_max"])
    def test_monotone_in_threshold(self, field):
        """Should only ever add triangles as a threshold grows."""
        rng = np.random.default_rng(3)
        mesh = triangulate(PointSet(xy=rng.uniform(0, 10, size=(300, 2))))
        previous = np.zeros(mesh.triangle_count, dtype=bool)
        for threshold in (0.2, 0.4, 0.6, 0.8, 1.2, 2.0, 5.0):
            bits = filter_triangles(mesh, FilterConfig(**{field: threshold})).bits
            assert not np.any(previous & ~bits)
            previous = bits
        assert previous.any()

    def test_vectorised_radii_match_scalar(self):
        """Should agree with the scalar circumradius."""
        rng = np.random.default_rng(2)
        mesh = triangulate(PointSet(xy=rng.uniform(0, 10, size=(60, 2))))
        radii = circumradii_sq(mesh)
        for t in range(mesh.triangle_count):
            assert radii[t] == pytest.approx(circumradius_sq(*mesh.triangle_coords(t)))

    def test_max_edge(self, unit_square_points):
        """Should report the diagonal as the longest edge."""
        mesh = triangulate(unit_square_points)
        assert max_edge_lengths_sq(mesh).tolist() == pytest.approx([2.0, 2.0])


class TestExtractRegions:
    """Tests for extract_regions."""

    def test_one_region_on_lattice(self, grid_3x3):
        """Should group a connected lattice into one region."""
        mesh = triangulate(grid_3x3)
        regions = extract_regions(mesh, filter_triangles(mesh, FilterConfig(l_max=1.5)))
        assert len(regions) == 1
        assert regions.triangle_total == 8

    def test_two_clusters(self, two_clusters):
        """Should separate lattices that only long triangles connect."""
        mesh = triangulate(two_clusters)
        fs = filter_triangles(mesh, FilterConfig(l_max=1.5))
        regions = extract_regions(mesh, fs)
        assert len(regions) == 2
        assert sorted(len(r) for r in regions.regions) == [8, 8]

    def test_matches_union_find(self):
        """Should produce the same partition as a union-find oracle."""
        rng = np.random.default_rng(4)
        mesh = triangulate(PointSet(xy=rng.uniform(0, 20, size=(300, 2))))
        fs = filter_triangles(mesh, FilterConfig(alpha=1.2))
        regions = extract_regions(mesh, fs)
        assert sorted(map(sorted, (set(r) for r in regions.regions))) == sorted(
            map(sorted, union_find_components(mesh, fs))
        )

    def test_regions_are_disjoint_and_ordered(self):
        """Should list each retained triangle once, seeds ascending."""
        rng = np.random.default_rng(6)
        mesh = triangulate(PointSet(xy=rng.uniform(0, 20, size=(300, 2))))
        fs = filter_triangles(mesh, FilterConfig(alpha=1.0))
        regions = extract_regions(mesh, fs)
        flat = [t for r in regions.regions for t in r]
        assert sorted(flat) == fs.retained()
        seeds = [r[0] for r in regions.regions]
        assert seeds == sorted(seeds)

    def test_min_region_size(self, two_clusters):
        """Should drop regions smaller than the minimum."""
        points = PointSet(xy=np.vstack([two_clusters.xy, [[20.0, 0.0], [21.0, 0.0], [20.0, 1.0]]]))
        mesh = triangulate(points)
        fs = filter_triangles(mesh, FilterConfig(l_max=1.5))
        assert len(extract_regions(mesh, fs)) == 3
        assert len(extract_regions(mesh, fs, min_region_size=2)) == 2

    def test_empty_filter(self, grid_3x3):
        """Should give no regions when nothing is retained."""
        mesh = triangulate(grid_3x3)
        regions = extract_regions(mesh, filter_triangles(mesh, FilterConfig(l_max=0.5)))
        assert len(regions) == 0

    def test_size_mismatch(self, grid_3x3):
        """Should reject a filtered set of the wrong length."""
        mesh = triangulate(grid_3x3)
        with pytest.raises(ValueError):
            extract_regions(mesh, FilteredSet(bits=np.ones(3, dtype=bool)))
