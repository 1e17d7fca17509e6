"""Benchmark harness and random-polygon study.

Point sampling happens before the timed region; only the three pipeline
stages are measured.
"""

import csv
import json
import logging
from pathlib import Path

import numpy as np

from benchmark_models import (
    CSV_COLUMNS,
    BandSummary,
    BenchmarkCase,
    BenchmarkRow,
    BenchmarkSuiteConfig,
    StudyConfig,
    StudyResults,
    StudyTrial,
)
from errors import GenerationError
from extraction.polygons import extract_multipolygon
from geometry.point import PointSet
from metrics.convexity import convexity, convexity_band
from metrics.density import suggest_alpha
from metrics.generators import generate_random_polygon, sample_points_in_multipolygon
from metrics.shape_error import l2_error, make_rng
from metrics.validity import validate_polygon
from models import ExtractionReport, FilterConfig, MultiPolygon
from serialization.readers import read_geometry

logger = logging.getLogger(__name__)


def load_suite(path: Path) -> BenchmarkSuiteConfig:
    """Load a suite file; raises pydantic ValidationError on bad content."""
    return BenchmarkSuiteConfig.model_validate_json(Path(path).read_text(encoding="utf-8"))


def _mean_std(values: list[float]) -> tuple[float, float]:
    arr = np.asarray(values, dtype=np.float64)
    return round(float(arr.mean()), 3), round(float(arr.std()), 3)


def multipolygon_valid(mp: MultiPolygon, ps: PointSet) -> bool:
    return all(validate_polygon(p, ps).is_valid for p in mp.polygons)


class BenchmarkRunner:
    """Runs every (case, point count) pair of a suite."""

    def __init__(
        self,
        suite: BenchmarkSuiteConfig,
        repetitions: int = 10,
        seed: int = 0,
        base_dir: Path | None = None,
    ):
        if repetitions < 1:
            raise ValueError(f"repetitions must be positive, got {repetitions}")
        self.suite = suite
        self.repetitions = repetitions
        self.seed = seed
        self.base_dir = base_dir or Path.cwd()

    def _ground_truth(self, case: BenchmarkCase) -> tuple[MultiPolygon, PointSet]:
        if case.generator is not None:
            g = case.generator
            polygon, ps = generate_random_polygon(
                g.n_vertices, g.holes, g.seed, spikiness=g.spikiness, radius=g.radius
            )
            return MultiPolygon(polygons=[polygon]), ps
        return read_geometry(self.base_dir / case.fixture)

    def _filter_config(self, case: BenchmarkCase, points: PointSet) -> FilterConfig:
        alpha = suggest_alpha(points) if case.auto_alpha else case.alpha
        return FilterConfig(
            alpha=alpha, l_max=case.lmax, min_region_size=case.min_region_size
        )

    def run_case(self, case: BenchmarkCase, n_points: int) -> BenchmarkRow:
        gt, gt_ps = self._ground_truth(case)
        points = sample_points_in_multipolygon(gt, gt_ps, n_points, self.seed + n_points)
        cfg = self._filter_config(case, points)

        reports: list[ExtractionReport] = []
        mp = MultiPolygon()
        for _ in range(self.repetitions):
            mp, report = extract_multipolygon(points, cfg)
            reports.append(report)

        stats = {}
        for stage in ("triangulation", "shape_extraction", "polygon_extraction", "total"):
            mean, std = _mean_std([getattr(r.timings, f"{stage}_ms") for r in reports])
            stats[f"{stage}_ms_mean"] = mean
            stats[f"{stage}_ms_std"] = std

        error = None
        if not mp.is_empty:
            error = l2_error(gt, mp, gt_ps, points, case.error_samples, self.seed).l2_error

        row = BenchmarkRow(
            case=case.name,
            n_points=n_points,
            repetitions=self.repetitions,
            l2_error=error,
            valid=multipolygon_valid(mp, points),
            **stats,
        )
        logger.info(
            "%s n=%d total %.3f ms (sd %.3f)",
            case.name,
            n_points,
            row.total_ms_mean,
            row.total_ms_std,
        )
        return row

    def run(self) -> list[BenchmarkRow]:
        return [
            self.run_case(case, n)
            for case in self.suite.cases
            for n in case.n_points
        ]


def save_csv_report(rows: list[BenchmarkRow], output_path: Path) -> None:
    with open(output_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.csv_values())


class RandomStudy:
    """Extracts random polygons with the suggested alpha and scores them.

    Each trial draws its spikiness uniformly from the configured range so the
    trials spread over the convexity bands.
    """

    def __init__(self, config: StudyConfig):
        self.config = config

    def run_trial(self, index: int) -> StudyTrial:
        cfg = self.config
        seed = cfg.seed + index
        rng = make_rng(seed)
        spikiness = float(rng.uniform(*cfg.spikiness_range))
        holes = 0
        if cfg.max_holes > 0 and rng.uniform() < cfg.hole_fraction:
            holes = int(rng.integers(1, cfg.max_holes + 1))

        while True:
            try:
                polygon, gt_ps = generate_random_polygon(
                    cfg.n_vertices, holes, seed, spikiness=spikiness
                )
                break
            except GenerationError:
                # A very spiky shell may not fit the requested holes.
                logger.info("trial %d: no room for %d holes, retrying", index, holes)
                holes -= 1
        gt = MultiPolygon(polygons=[polygon])
        points = sample_points_in_multipolygon(gt, gt_ps, cfg.n_points, seed)
        mp, report = extract_multipolygon(points, FilterConfig(alpha=suggest_alpha(points)))

        error = None
        if not mp.is_empty:
            error = l2_error(gt, mp, gt_ps, points, cfg.error_samples, seed).l2_error
        cv = convexity(polygon, gt_ps)
        valid = multipolygon_valid(mp, points)
        if not valid:
            logger.warning("trial %d (seed %d) produced an invalid polygon", index, seed)

        return StudyTrial(
            index=index,
            seed=seed,
            holes=holes,
            convexity=cv,
            band=convexity_band(cv),
            valid=valid,
            n_polygons=report.n_polygons,
            l2_error=error,
            total_ms=report.timings.total_ms,
        )

    def run(self) -> StudyResults:
        trials = [self.run_trial(i) for i in range(self.config.count)]
        return StudyResults(config=self.config, trials=trials, bands=summarize_bands(trials))


def summarize_bands(trials: list[StudyTrial]) -> list[BandSummary]:
    summaries = []
    for band in ("hi", "mid", "low"):
        members = [t for t in trials if t.band == band]
        if not members:
            continue
        errors = np.asarray(
            [t.l2_error for t in members if t.l2_error is not None], dtype=np.float64
        )
        has_errors = errors.size > 0
        summaries.append(
            BandSummary(
                band=band,
                count=len(members),
                valid_count=sum(t.valid for t in members),
                l2_mean=float(errors.mean()) if has_errors else None,
                l2_std=float(errors.std()) if has_errors else None,
                l2_max=float(errors.max()) if has_errors else None,
                total_ms_mean=round(float(np.mean([t.total_ms for t in members])), 3),
            )
        )
    return summaries


def save_json_results(results: StudyResults, output_path: Path) -> None:
    data = json.loads(results.model_dump_json())
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
