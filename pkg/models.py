from enum import Enum

from pydantic import BaseModel, Field, computed_field, model_validator


# ============================================================================
# Geometry Models
# ============================================================================


class LinearRing(BaseModel):
    """An open ring of point indices; the closing segment is implicit.

    Construction does not enforce the ring invariants (length, simplicity) so
    that the validity audit can report on malformed input rings.
    """

    indices: list[int]

    def __len__(self) -> int:
        return len(self.indices)

    def closed(self) -> list[int]:
        """Indices with the first one repeated at the end."""
        return self.indices + self.indices[:1]

    def reversed(self) -> "LinearRing":
        return LinearRing(indices=self.indices[::-1])

    def segments(self) -> list[tuple[int, int]]:
        """Consecutive index pairs, including the closing segment."""
        n = len(self.indices)
        return [(self.indices[k], self.indices[(k + 1) % n]) for k in range(n)]


class Polygon(BaseModel):
    """A shell ring and zero or more hole rings."""

    shell: LinearRing
    holes: list[LinearRing] = Field(default_factory=list)

    def rings(self) -> list[LinearRing]:
        """Shell first, then holes; the position is the ring id."""
        return [self.shell, *self.holes]


class MultiPolygon(BaseModel):
    polygons: list[Polygon] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.polygons)

    @property
    def is_empty(self) -> bool:
        return not self.polygons

    @property
    def n_holes(self) -> int:
        return sum(len(p.holes) for p in self.polygons)


class RingKind(str, Enum):
    SHELL = "shell"
    HOLE = "hole"


class ExtractedRing(BaseModel):
    """A ring produced by boundary following, tagged shell or hole."""

    ring: LinearRing
    kind: RingKind


# ============================================================================
# Pipeline Configuration and Reports
# ============================================================================


class FilterConfig(BaseModel):
    """Triangle filter criteria.

    A triangle is kept when its circumradius is at most ``alpha`` and its
    longest edge is at most ``l_max``; an unset criterion always passes.
    """

    alpha: float | None = Field(default=None, gt=0.0)
    l_max: float | None = Field(default=None, gt=0.0)
    min_region_size: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _require_a_criterion(self) -> "FilterConfig":
        if self.alpha is None and self.l_max is None:
            raise ValueError("at least one of alpha or l_max must be set")
        return self


class StageTimings(BaseModel):
    """Wall-clock milliseconds per pipeline stage."""

    triangulation_ms: float = Field(default=0.0, ge=0.0)
    shape_extraction_ms: float = Field(default=0.0, ge=0.0)
    polygon_extraction_ms: float = Field(default=0.0, ge=0.0)
    total_ms: float = Field(default=0.0, ge=0.0)


class ExtractionReport(BaseModel):
    """Timings and counts for one run of the extraction pipeline."""

    n_points: int
    n_triangles: int
    n_retained: int
    n_regions: int
    n_polygons: int
    n_holes: int
    alpha: float | None = None
    l_max: float | None = None
    min_region_size: int = 1
    timings: StageTimings


# ============================================================================
# Evaluation Models
# ============================================================================


class ViolationKind(str, Enum):
    TOO_SHORT = "too-short"
    DEGENERATE_EDGE = "degenerate-edge"
    SELF_INTERSECTION = "self-intersection"
    BAD_WINDING = "bad-winding"
    HOLE_OUTSIDE_SHELL = "hole-outside-shell"
    HOLE_IN_HOLE = "hole-in-hole"


class Violation(BaseModel):
    """One failed validity check. ``ring`` is 0 for the shell, k for hole k."""

    ring: int
    kind: ViolationKind
    detail: str = ""


class ValidityReport(BaseModel):
    violations: list[Violation] = Field(default_factory=list)

    @computed_field
    @property
    def is_valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


class ErrorEstimate(BaseModel):
    """Monte-Carlo estimate of the normalized symmetric-difference area."""

    l2_error: float = Field(ge=0.0)
    samples_used: int = Field(ge=1)
    seed: int


class SerializationConfig(BaseModel):
    """Output formatting options."""

    # Significant digits per coordinate in WKT and GeoJSON
    precision: int = Field(default=9, ge=1, le=17)

    # SVG canvas width in user units; height follows the aspect ratio
    svg_width: float = Field(default=800.0, gt=0.0)
    svg_margin: float = Field(default=0.05, ge=0.0, le=0.5)


class SamplingConfig(BaseModel):
    """Budgets for Monte-Carlo estimation and rejection sampling."""

    chunk_size: int = Field(default=65_536, ge=1)

    # Rejection sampling gives up when, after ``min_draws`` candidates,
    # the acceptance rate stays below this fraction.
    min_acceptance: float = Field(default=1e-4, gt=0.0, le=1.0)
    min_draws: int = Field(default=100_000, ge=1)
