from rich.console import Console
from rich.style import Style
from rich.text import Text
from rich.theme import Theme

SHELL_GREEN = "#27AE60"
HOLE_ORANGE = "#E67E22"
ERROR_RED = "#C0392B"
WARNING_GOLD = "#F1C40F"
INFO_BLUE = "#3498DB"
MUTED_GRAY = "#7F8C8D"
TEXT_WHITE = "#FFFFFF"

DEFAULT_THEME = Theme(
    {
        "title": Style(color=SHELL_GREEN, bold=True),
        "subtitle": Style(color=MUTED_GRAY),
        "success": Style(color=SHELL_GREEN),
        "warning": Style(color=WARNING_GOLD),
        "error": Style(color=ERROR_RED, bold=True),
        "info": Style(color=INFO_BLUE),
        "muted": Style(color=MUTED_GRAY),
        "hole": Style(color=HOLE_ORANGE),
        "logging.level.info": Style(color=INFO_BLUE),
        "logging.level.warning": Style(color=WARNING_GOLD),
    }
)

# Human-facing output goes to stderr; stdout carries geometry and reports.
CONSOLE = Console(theme=DEFAULT_THEME, stderr=True)


def get_error_style(l2_error: float) -> Style:
    """Color for a shape error fraction."""
    if l2_error <= 0.05:
        return Style(color=SHELL_GREEN, bold=True)
    elif l2_error <= 0.10:
        return Style(color=WARNING_GOLD)
    else:
        return Style(color=ERROR_RED)


def get_validity_text(valid: bool) -> Text:
    if valid:
        return Text("✓ valid", Style(color=SHELL_GREEN, bold=True))
    return Text("✗ invalid", Style(color=ERROR_RED, bold=True))


def create_error_header(message: str) -> Text:
    header = Text()
    header.append("✗ ", Style(color=ERROR_RED, bold=True))
    header.append(message, Style(color=ERROR_RED, bold=True))
    return header
