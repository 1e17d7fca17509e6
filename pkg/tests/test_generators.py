"""Tests for the random polygon generator and the rejection sampler."""

import numpy as np
import pytest
from scipy import stats

from errors import GenerationError
from geometry.primitives import signed_area
from metrics import (
    convexity,
    generate_random_polygon,
    points_in_multipolygon,
    sample_points_in_multipolygon,
    sample_points_in_polygon,
    validate_polygon,
)
from models import MultiPolygon, SamplingConfig


class TestGenerateRandomPolygon:
    """Tests for generate_random_polygon."""

    def test_deterministic(self):
        """Should return identical polygons for equal seeds."""
        first = generate_random_polygon(40, holes=2, seed=11)
        second = generate_random_polygon(40, holes=2, seed=11)
        assert first[0] == second[0]
        assert np.array_equal(first[1].xy, second[1].xy)

    def test_seeds_differ(self):
        """Should return different polygons for different seeds."""
        first = generate_random_polygon(40, seed=1)
        second = generate_random_polygon(40, seed=2)
        assert not np.array_equal(first[1].xy, second[1].xy)

    def test_layout(self):
        """Should index the shell first, then each hole."""
        polygon, ps = generate_random_polygon(20, holes=3, seed=4, hole_vertices=8)
        assert polygon.shell.indices == list(range(20))
        assert [h.indices[0] for h in polygon.holes] == [20, 28, 36]
        assert len(ps) == 20 + 3 * 8

    @pytest.mark.parametrize("seed", range(6))
    def test_valid_with_holes(self, seed):
        """Should produce valid polygons with disjoint holes inside the shell."""
        polygon, ps = generate_random_polygon(32, holes=3, seed=seed, spikiness=0.3)
        assert validate_polygon(polygon, ps).is_valid
        assert signed_area(polygon.shell, ps) > 0
        assert all(signed_area(h, ps) < 0 for h in polygon.holes)

    @pytest.mark.parametrize("n_vertices", range(3, 9))
    def test_few_spiky_vertices_stay_simple(self, n_vertices):
        """Should keep shells with few, very spiky vertices valid for every seed."""
        for seed in range(300):
            polygon, ps = generate_random_polygon(n_vertices, seed=seed, spikiness=0.9)
            assert validate_polygon(polygon, ps).is_valid, seed
            assert signed_area(polygon.shell, ps) > 0

    def test_wide_gap_redrawn(self):
        """Should redraw angles that would leave a half-turn without a vertex."""
        polygon, ps = generate_random_polygon(5, seed=80, spikiness=0.5)
        angles = np.sort(np.arctan2(ps.xy[:, 1], ps.xy[:, 0]) % (2 * np.pi))
        gaps = np.diff(angles, append=angles[0] + 2 * np.pi)
        assert gaps.max() < np.pi
        assert validate_polygon(polygon, ps).is_valid

    def test_spikiness_lowers_convexity(self):
        """Should give lower convexity on average for spikier shells."""
        smooth = [convexity(*generate_random_polygon(48, seed=s, spikiness=0.05)) for s in range(10)]
        spiky = [convexity(*generate_random_polygon(48, seed=s, spikiness=0.9)) for s in range(10)]
        assert np.mean(spiky) < np.mean(smooth)
        assert min(smooth) > 0.9

    def test_no_room_for_holes(self):
        """Should give up when holes cannot be placed."""
        with pytest.raises(GenerationError):
            generate_random_polygon(8, holes=60, seed=0, spikiness=0.9)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_vertices": 2},
            {"n_vertices": 10, "holes": -1},
            {"n_vertices": 10, "spikiness": 1.0},
            {"n_vertices": 10, "hole_vertices": 2},
        ],
    )
    def test_rejects_bad_arguments(self, kwargs):
        """Should validate its arguments."""
        with pytest.raises(ValueError):
            generate_random_polygon(**kwargs)


class TestSamplePoints:
    """Tests for rejection sampling."""

    def test_exact_count_inside(self, random_polygon):
        """Should return exactly n distinct points inside the polygon."""
        polygon, ps = random_polygon
        points = sample_points_in_polygon(polygon, ps, 3000, seed=5)
        assert len(points) == 3000
        mp = MultiPolygon(polygons=[polygon])
        assert points_in_multipolygon(mp, ps, points.xy).all()

    def test_deterministic(self, random_polygon):
        """Should repeat exactly for a fixed seed."""
        polygon, ps = random_polygon
        first = sample_points_in_polygon(polygon, ps, 500, seed=8)
        second = sample_points_in_polygon(polygon, ps, 500, seed=8)
        assert np.array_equal(first.xy, second.xy)

    def test_uniform(self, unit_square):
        """Should fill a 4x4 grid of cells evenly (chi-square)."""
        mp, ps = unit_square
        points = sample_points_in_multipolygon(mp, ps, 16_000, seed=2)
        cells = np.minimum((points.xy * 4).astype(int), 3)
        counts = np.bincount(cells[:, 0] * 4 + cells[:, 1], minlength=16)
        assert stats.chisquare(counts).pvalue > 0.001

    def test_low_acceptance(self):
        """Should fail when almost every candidate is rejected."""
        polygon, ps = generate_random_polygon(3, seed=0, spikiness=0.0)
        cfg = SamplingConfig(chunk_size=1000, min_acceptance=0.9, min_draws=1000)
        with pytest.raises(GenerationError):
            sample_points_in_polygon(polygon, ps, 10_000, seed=0, cfg=cfg)

    def test_empty_shape(self, unit_square_points):
        """Should refuse an empty shape."""
        with pytest.raises(GenerationError):
            sample_points_in_multipolygon(MultiPolygon(), unit_square_points, 10, seed=0)
