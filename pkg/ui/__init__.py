"""Terminal rendering of extraction reports, benchmarks and audits."""

from ui.app import ReportUI
from ui.components import BenchmarkTable, ReportPanel, StudyTable, ValidityTable
from ui.styles import (
    CONSOLE,
    ERROR_RED,
    HOLE_ORANGE,
    INFO_BLUE,
    MUTED_GRAY,
    SHELL_GREEN,
)

__all__ = [
    "ReportUI",
    "ReportPanel",
    "BenchmarkTable",
    "ValidityTable",
    "StudyTable",
    "CONSOLE",
    "SHELL_GREEN",
    "HOLE_ORANGE",
    "ERROR_RED",
    "INFO_BLUE",
    "MUTED_GRAY",
]
