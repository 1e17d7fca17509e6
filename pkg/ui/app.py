from rich.console import Console
from rich.text import Text

from benchmark_models import BenchmarkRow, StudyResults
from models import ExtractionReport, ValidityReport
from ui.components import BenchmarkTable, ReportPanel, StudyTable, ValidityTable
from ui.styles import CONSOLE, INFO_BLUE, MUTED_GRAY, create_error_header


class ReportUI:
    """Renders command results on the human-facing console (stderr)."""

    def __init__(self, console: Console | None = None):
        self.console = console or CONSOLE

    def show_report(self, report: ExtractionReport) -> None:
        self.console.print(ReportPanel(report))

    def show_benchmark(self, rows: list[BenchmarkRow]) -> None:
        self.console.print(BenchmarkTable(rows))

    def show_validity(self, reports: list[ValidityReport]) -> None:
        self.console.print(ValidityTable(reports))

    def show_study(self, results: StudyResults) -> None:
        self.console.print(StudyTable(results))

    def show_error(self, message: str, hint: str | None = None) -> None:
        self.console.print(create_error_header(message))
        if hint:
            self.console.print(Text(hint, style=MUTED_GRAY))

    def show_info(self, message: str) -> None:
        self.console.print(Text(message, style=INFO_BLUE))
