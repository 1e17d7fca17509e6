from rich import box
from rich.align import Align
from rich.columns import Columns
from rich.panel import Panel
from rich.style import Style
from rich.table import Table
from rich.text import Text

from benchmark_models import BenchmarkRow, StudyResults
from models import ExtractionReport, ValidityReport
from ui.styles import (
    ERROR_RED,
    HOLE_ORANGE,
    INFO_BLUE,
    MUTED_GRAY,
    SHELL_GREEN,
    TEXT_WHITE,
    get_error_style,
    get_validity_text,
)


def _ms(value: float) -> str:
    return f"{value:,.3f} ms"


def _l2_text(value: float | None) -> Text:
    if value is None:
        return Text("n/a", Style(color=MUTED_GRAY))
    return Text(f"{value:.4f}", get_error_style(value))


class ReportPanel:
    """Counts, parameters and stage timings of one extraction."""

    def __init__(self, report: ExtractionReport):
        self.report = report

    def render(self) -> Panel:
        r = self.report

        counts = Table(show_header=False, border_style=MUTED_GRAY, box=box.SIMPLE)
        counts.add_column("Label", style=Style(color=MUTED_GRAY))
        counts.add_column("Value", justify="right")
        counts.add_row("Points", f"{r.n_points:,}")
        counts.add_row("Triangles", f"{r.n_triangles:,}")
        counts.add_row("Retained", f"{r.n_retained:,}")
        counts.add_row("Regions", f"{r.n_regions:,}")
        counts.add_row(
            "Polygons", Text(f"{r.n_polygons:,}", Style(color=SHELL_GREEN, bold=True))
        )
        counts.add_row("Holes", Text(f"{r.n_holes:,}", Style(color=HOLE_ORANGE)))

        params = Table(show_header=False, border_style=MUTED_GRAY, box=box.SIMPLE)
        params.add_column("Label", style=Style(color=MUTED_GRAY))
        params.add_column("Value", justify="right")
        params.add_row("alpha", "-" if r.alpha is None else f"{r.alpha:.6g}")
        params.add_row("l_max", "-" if r.l_max is None else f"{r.l_max:.6g}")
        params.add_row("min region", str(r.min_region_size))
        params.add_row("triangulation", _ms(r.timings.triangulation_ms))
        params.add_row("shape", _ms(r.timings.shape_extraction_ms))
        params.add_row("polygons", _ms(r.timings.polygon_extraction_ms))
        params.add_row(
            "total", Text(_ms(r.timings.total_ms), Style(color=INFO_BLUE, bold=True))
        )

        return Panel(
            Columns([Align.center(counts), Align.center(params)], padding=(0, 3)),
            title="Extraction",
            border_style=SHELL_GREEN,
            box=box.HEAVY,
            padding=(1, 2),
        )

    def __rich__(self) -> Panel:
        return self.render()


class BenchmarkTable:
    """Mean and deviation of stage timings per case and point count."""

    def __init__(self, rows: list[BenchmarkRow]):
        self.rows = rows

    def render(self) -> Panel:
        table = Table(
            show_header=True,
            header_style=Style(color=SHELL_GREEN, bold=True),
            border_style=MUTED_GRAY,
            box=box.ROUNDED,
        )
        table.add_column("Case", style=Style(color=TEXT_WHITE))
        table.add_column("n", justify="right")
        table.add_column("Triangulation", justify="right")
        table.add_column("Shape", justify="right")
        table.add_column("Polygons", justify="right")
        table.add_column("Total", justify="right")
        table.add_column("L2", justify="right")
        table.add_column("Valid", justify="center")

        for row in self.rows:
            table.add_row(
                row.case,
                f"{row.n_points:,}",
                f"{row.triangulation_ms_mean:.1f} ± {row.triangulation_ms_std:.1f}",
                f"{row.shape_extraction_ms_mean:.1f} ± {row.shape_extraction_ms_std:.1f}",
                f"{row.polygon_extraction_ms_mean:.1f} ± {row.polygon_extraction_ms_std:.1f}",
                Text(
                    f"{row.total_ms_mean:.1f} ± {row.total_ms_std:.1f}",
                    Style(color=INFO_BLUE, bold=True),
                ),
                _l2_text(row.l2_error),
                get_validity_text(row.valid),
            )

        return Panel(
            Align.center(table),
            title="Benchmark (ms)",
            border_style=SHELL_GREEN,
            box=box.HEAVY,
            padding=(1, 1),
        )

    def __rich__(self) -> Panel:
        return self.render()


class ValidityTable:
    """Violations found per polygon; one row per violation."""

    def __init__(self, reports: list[ValidityReport]):
        self.reports = reports

    @property
    def is_valid(self) -> bool:
        return all(r.is_valid for r in self.reports)

    def render(self) -> Panel:
        table = Table(
            show_header=True,
            header_style=Style(color=SHELL_GREEN, bold=True),
            border_style=MUTED_GRAY,
            box=box.ROUNDED,
        )
        table.add_column("Polygon", justify="right")
        table.add_column("Ring", justify="right")
        table.add_column("Kind", style=Style(color=ERROR_RED))
        table.add_column("Detail", style=Style(color=MUTED_GRAY))

        for index, report in enumerate(self.reports):
            if report.is_valid:
                table.add_row(str(index), "", get_validity_text(True), "")
                continue
            for v in report.violations:
                table.add_row(str(index), str(v.ring), v.kind.value, v.detail)

        return Panel(
            Align.center(table),
            title="Validity",
            subtitle=get_validity_text(self.is_valid),
            border_style=SHELL_GREEN if self.is_valid else ERROR_RED,
            box=box.HEAVY,
            padding=(1, 1),
        )

    def __rich__(self) -> Panel:
        return self.render()


class StudyTable:
    """Per convexity band summary of a random-polygon study."""

    def __init__(self, results: StudyResults):
        self.results = results

    def render(self) -> Panel:
        table = Table(
            show_header=True,
            header_style=Style(color=SHELL_GREEN, bold=True),
            border_style=MUTED_GRAY,
            box=box.ROUNDED,
        )
        table.add_column("Band")
        table.add_column("Polygons", justify="right")
        table.add_column("Valid", justify="right")
        table.add_column("L2 mean", justify="right")
        table.add_column("L2 std", justify="right")
        table.add_column("L2 max", justify="right")
        table.add_column("Total", justify="right")

        for band in self.results.bands:
            valid_style = Style(
                color=SHELL_GREEN if band.valid_count == band.count else ERROR_RED
            )
            table.add_row(
                band.band,
                str(band.count),
                Text(f"{band.valid_count}/{band.count}", valid_style),
                _l2_text(band.l2_mean),
                "-" if band.l2_std is None else f"{band.l2_std:.4f}",
                _l2_text(band.l2_max),
                _ms(band.total_ms_mean),
            )

        return Panel(
            Align.center(table),
            title=f"Random polygons ({len(self.results.trials)})",
            subtitle=get_validity_text(self.results.all_valid),
            border_style=SHELL_GREEN,
            box=box.HEAVY,
            padding=(1, 1),
        )

    def __rich__(self) -> Panel:
        return self.render()
