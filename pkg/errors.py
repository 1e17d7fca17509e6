"""Exception hierarchy for the extraction pipeline.

Errors that describe bad input also derive from ValueError so callers that
only know about the builtin keep working.
"""


class PolygonExtractionError(Exception):
    """Base class for every error raised by this package."""


class TooFewPointsError(PolygonExtractionError, ValueError):
    """Raised when an operation needs more points than it was given."""


class DegenerateInputError(PolygonExtractionError, ValueError):
    """Raised when all input points are collinear (no 2D extent)."""


class DuplicatePointError(PolygonExtractionError, ValueError):
    """Raised when a PointSet would contain the same coordinate twice."""

    def __init__(self, first: int, second: int, x: float, y: float):
        self.first = first
        self.second = second
        super().__init__(
            f"Duplicate point ({x!r}, {y!r}) at indices {first} and {second}"
        )


class NonFinitePointError(PolygonExtractionError, ValueError):
    """Raised when a coordinate is NaN or infinite."""

    def __init__(self, index: int, x: float, y: float):
        self.index = index
        super().__init__(f"Non-finite point ({x!r}, {y!r}) at index {index}")


class CorruptBoundaryError(PolygonExtractionError):
    """Raised when boundary following cannot close a ring.

    This always means an upstream invariant was broken (the mesh or the
    region membership is inconsistent); it is never recovered from.
    """


class ZeroAreaError(PolygonExtractionError, ValueError):
    """Raised when a metric needs a positive area and got none."""


class GenerationError(PolygonExtractionError):
    """Raised when a random generator exhausts its retry budget."""


class PointParseError(PolygonExtractionError, ValueError):
    """Raised when a point file cannot be parsed.

    Exactly one of ``line`` (CSV, 1-based) or ``feature`` (GeoJSON, 0-based)
    locates the problem.
    """

    def __init__(
        self,
        message: str,
        line: int | None = None,
        feature: int | None = None,
    ):
        self.line = line
        self.feature = feature
        if line is not None:
            message = f"line {line}: {message}"
        elif feature is not None:
            message = f"feature {feature}: {message}"
        super().__init__(message)


class GeometryParseError(PolygonExtractionError, ValueError):
    """Raised when a WKT or GeoJSON geometry file cannot be read."""
