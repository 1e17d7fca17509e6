import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError
from rich.logging import RichHandler

from benchmark import (
    BenchmarkRunner,
    RandomStudy,
    load_suite,
    save_csv_report,
    save_json_results,
)
from benchmark_models import StudyConfig
from errors import (
    DuplicatePointError,
    GeometryParseError,
    NonFinitePointError,
    PointParseError,
    PolygonExtractionError,
)
from extraction import extract_multipolygon
from metrics import suggest_alpha, validate_polygon
from models import FilterConfig, SerializationConfig
from serialization import parse_points, read_geometry, serialize
from triangulation import triangulate
from ui import CONSOLE, ReportUI

logger = logging.getLogger(__name__)

EXIT_OK = 0
# Also used when an output file cannot be written.
EXIT_PARSE = 1
EXIT_INVALID_PARAMS = 2
EXIT_EXTRACTION = 3
EXIT_INVALID_GEOMETRY = 4

INPUT_ERRORS = (PointParseError, GeometryParseError, DuplicatePointError, NonFinitePointError)


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=CONSOLE, show_path=False)],
        force=True,
    )


def _validation_message(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
        for err in exc.errors()
    )


def _write_failed(ui: ReportUI, exc: OSError) -> int:
    ui.show_error(f"Cannot write {exc.filename}", exc.strerror)
    return EXIT_PARSE


def create_parser() -> argparse.ArgumentParser:
    """Create argument parser with subcommands."""
    parser = argparse.ArgumentParser(
        description="Concave polygons with holes from unorganized 2D points"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Extract subcommand
    ext = subparsers.add_parser("extract", help="Extract polygons from a point file")
    ext.add_argument("--input", "-i", type=Path, required=True, help="CSV or GeoJSON points")
    ext.add_argument(
        "--format",
        choices=["csv", "geojson"],
        default=None,
        help="Point file format (default: from the file extension)",
    )
    alpha_group = ext.add_mutually_exclusive_group()
    alpha_group.add_argument(
        "--alpha", "-a", type=float, default=None, help="Maximum circumradius"
    )
    alpha_group.add_argument(
        "--auto-alpha",
        action="store_true",
        help="Derive alpha from the point density",
    )
    ext.add_argument("--lmax", "-l", type=float, default=None, help="Maximum edge length")
    ext.add_argument(
        "--min-region-size",
        type=int,
        default=1,
        help="Drop regions with fewer triangles (default: 1)",
    )
    ext.add_argument(
        "--out",
        "-o",
        type=Path,
        default=None,
        help="Output geometry file (default: standard output)",
    )
    ext.add_argument(
        "--out-format",
        choices=["wkt", "geojson", "svg"],
        default="wkt",
        help="Output geometry format (default: wkt)",
    )
    ext.add_argument("--svg", type=Path, default=None, help="Also render an SVG here")
    ext.add_argument(
        "--precision",
        type=int,
        default=9,
        help="Significant digits in WKT and GeoJSON (default: 9)",
    )
    ext.add_argument(
        "--dump-mesh", type=Path, default=None, help="Write the half-edge mesh dump here"
    )
    ext.add_argument(
        "--workers", type=int, default=None, help="Threads for polygon extraction"
    )
    ext.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    # Benchmark subcommand
    bench = subparsers.add_parser("benchmark", help="Time the pipeline on a suite")
    bench.add_argument("--input", "-i", type=Path, required=True, help="Suite JSON file")
    bench.add_argument(
        "--reps", type=int, default=10, help="Repetitions per point count (default: 10)"
    )
    bench.add_argument("--seed", type=int, default=0, help="Sampling seed (default: 0)")
    bench.add_argument(
        "--report",
        type=Path,
        default=Path("benchmark_report.csv"),
        help="CSV report path (default: benchmark_report.csv)",
    )
    bench.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    # Validate subcommand
    val = subparsers.add_parser("validate", help="Audit polygons in a WKT/GeoJSON file")
    val.add_argument("--input", "-i", type=Path, required=True, help="Geometry file")
    val.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    # Random-study subcommand
    study = subparsers.add_parser(
        "random-study", help="Extract random polygons and summarize by convexity"
    )
    study.add_argument("--count", type=int, default=100, help="Polygons (default: 100)")
    study.add_argument(
        "--n-points", type=int, default=8000, help="Samples per polygon (default: 8000)"
    )
    study.add_argument("--seed", type=int, default=0, help="Base seed (default: 0)")
    study.add_argument(
        "--study-out",
        type=Path,
        default=None,
        help="Write per-trial results as JSON",
    )
    study.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    return parser


def run_extract(args, ui: ReportUI) -> int:
    try:
        points = parse_points(args.input, args.format)
    except INPUT_ERRORS as exc:
        ui.show_error(f"Cannot read {args.input}", str(exc))
        return EXIT_PARSE

    try:
        ser_cfg = SerializationConfig(precision=args.precision)
        alpha = args.alpha
        if args.auto_alpha:
            alpha = suggest_alpha(points)
            logger.info("suggested alpha %.6g", alpha)
        cfg = FilterConfig(
            alpha=alpha, l_max=args.lmax, min_region_size=args.min_region_size
        )
    except ValidationError as exc:
        ui.show_error("Invalid parameters", _validation_message(exc))
        return EXIT_INVALID_PARAMS
    except PolygonExtractionError as exc:
        ui.show_error("Cannot derive alpha", str(exc))
        return EXIT_EXTRACTION
    if args.workers is not None and args.workers < 1:
        ui.show_error("Invalid parameters", f"--workers must be positive, got {args.workers}")
        return EXIT_INVALID_PARAMS

    try:
        mp, report = extract_multipolygon(points, cfg, workers=args.workers)
        if args.dump_mesh is not None:
            args.dump_mesh.write_text("\n".join(triangulate(points).dump()) + "\n")
    except PolygonExtractionError as exc:
        ui.show_error("Extraction failed", str(exc))
        return EXIT_EXTRACTION
    except OSError as exc:
        return _write_failed(ui, exc)

    payload = serialize(mp, points, args.out_format, ser_cfg)
    try:
        if args.out is None:
            sys.stdout.write(payload.decode("utf-8"))
        else:
            args.out.write_bytes(payload)
        if args.svg is not None:
            args.svg.write_bytes(serialize(mp, points, "svg", ser_cfg))
    except OSError as exc:
        return _write_failed(ui, exc)

    print(report.model_dump_json())
    ui.show_report(report)
    return EXIT_OK


def run_benchmark(args, ui: ReportUI) -> int:
    try:
        suite = load_suite(args.input)
    except OSError as exc:
        ui.show_error(f"Cannot read {args.input}", exc.strerror)
        return EXIT_PARSE
    except UnicodeDecodeError:
        ui.show_error(f"Cannot read {args.input}", "not UTF-8 text")
        return EXIT_PARSE
    except ValidationError as exc:
        ui.show_error("Invalid benchmark suite", _validation_message(exc))
        return EXIT_INVALID_PARAMS

    try:
        runner = BenchmarkRunner(
            suite, repetitions=args.reps, seed=args.seed, base_dir=args.input.parent
        )
    except ValueError as exc:
        ui.show_error("Invalid parameters", str(exc))
        return EXIT_INVALID_PARAMS

    try:
        rows = runner.run()
    except INPUT_ERRORS as exc:
        ui.show_error("Cannot read fixture", str(exc))
        return EXIT_PARSE
    except ValidationError as exc:
        ui.show_error("Invalid parameters", _validation_message(exc))
        return EXIT_INVALID_PARAMS
    except PolygonExtractionError as exc:
        ui.show_error("Benchmark failed", str(exc))
        return EXIT_EXTRACTION

    try:
        save_csv_report(rows, args.report)
    except OSError as exc:
        return _write_failed(ui, exc)
    ui.show_benchmark(rows)
    ui.show_info(f"Report written to {args.report}")
    return EXIT_OK


def run_validate(args, ui: ReportUI) -> int:
    try:
        mp, ps = read_geometry(args.input)
    except INPUT_ERRORS as exc:
        ui.show_error(f"Cannot read {args.input}", str(exc))
        return EXIT_PARSE

    reports = [validate_polygon(p, ps) for p in mp.polygons]
    valid = all(r.is_valid for r in reports)
    print(
        json.dumps(
            {
                "valid": valid,
                "polygons": len(reports),
                "violations": [
                    {"polygon": i, **v.model_dump(mode="json")}
                    for i, r in enumerate(reports)
                    for v in r.violations
                ],
            }
        )
    )
    ui.show_validity(reports)
    return EXIT_OK if valid else EXIT_INVALID_GEOMETRY


def run_random_study(args, ui: ReportUI) -> int:
    try:
        config = StudyConfig(count=args.count, n_points=args.n_points, seed=args.seed)
    except ValidationError as exc:
        ui.show_error("Invalid parameters", _validation_message(exc))
        return EXIT_INVALID_PARAMS

    try:
        results = RandomStudy(config).run()
    except PolygonExtractionError as exc:
        ui.show_error("Study failed", str(exc))
        return EXIT_EXTRACTION

    if args.study_out is not None:
        try:
            save_json_results(results, args.study_out)
        except OSError as exc:
            return _write_failed(ui, exc)
    ui.show_study(results)
    return EXIT_OK


COMMANDS = {
    "extract": run_extract,
    "benchmark": run_benchmark,
    "validate": run_validate,
    "random-study": run_random_study,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point with CLI routing; returns the process exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return COMMANDS[args.command](args, ReportUI())


if __name__ == "__main__":
    sys.exit(main())
