"""Data models for the benchmark harness and the random-polygon study."""

from typing import Literal

from pydantic import BaseModel, Field, model_validator

CSV_COLUMNS = [
    "case",
    "n_points",
    "repetitions",
    "triangulation_ms_mean",
    "triangulation_ms_std",
    "shape_extraction_ms_mean",
    "shape_extraction_ms_std",
    "polygon_extraction_ms_mean",
    "polygon_extraction_ms_std",
    "total_ms_mean",
    "total_ms_std",
    "l2_error",
    "valid",
]


class GeneratorParams(BaseModel):
    """Parameters of a generated ground-truth polygon."""

    n_vertices: int = Field(default=64, ge=3)
    holes: int = Field(default=0, ge=0)
    seed: int = 0
    spikiness: float = Field(default=0.5, ge=0.0, lt=1.0)
    radius: float = Field(default=50.0, gt=0.0)


class BenchmarkCase(BaseModel):
    """One ground-truth shape sampled at one or more point counts.

    The shape is either generated or read from ``fixture`` (a WKT or GeoJSON
    file, relative to the suite file).
    """

    name: str
    generator: GeneratorParams | None = None
    fixture: str | None = None
    n_points: list[int] = Field(min_length=1)
    alpha: float | None = Field(default=None, gt=0.0)
    lmax: float | None = Field(default=None, gt=0.0)
    auto_alpha: bool = False
    min_region_size: int = Field(default=1, ge=1)
    error_samples: int = Field(default=100_000, ge=1)

    @model_validator(mode="after")
    def _check_source_and_filter(self) -> "BenchmarkCase":
        if (self.generator is None) == (self.fixture is None):
            raise ValueError(f"case {self.name!r}: give exactly one of generator or fixture")
        if self.alpha is None and self.lmax is None and not self.auto_alpha:
            raise ValueError(f"case {self.name!r}: set alpha, lmax or auto_alpha")
        if any(n < 3 for n in self.n_points):
            raise ValueError(f"case {self.name!r}: every n_points entry must be >= 3")
        return self


class BenchmarkSuiteConfig(BaseModel):
    cases: list[BenchmarkCase] = Field(min_length=1)


class BenchmarkRow(BaseModel):
    """Timing statistics and accuracy for one (case, n_points) pair."""

    case: str
    n_points: int
    repetitions: int

    triangulation_ms_mean: float = Field(ge=0.0)
    triangulation_ms_std: float = Field(ge=0.0)
    shape_extraction_ms_mean: float = Field(ge=0.0)
    shape_extraction_ms_std: float = Field(ge=0.0)
    polygon_extraction_ms_mean: float = Field(ge=0.0)
    polygon_extraction_ms_std: float = Field(ge=0.0)
    total_ms_mean: float = Field(ge=0.0)
    total_ms_std: float = Field(ge=0.0)

    # None when the extraction was empty and no error can be computed
    l2_error: float | None
    valid: bool

    def csv_values(self) -> list[str]:
        values = self.model_dump()
        out = []
        for column in CSV_COLUMNS:
            value = values[column]
            if value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append(str(value).lower())
            elif isinstance(value, float):
                out.append(f"{value:.6f}" if column == "l2_error" else f"{value:.3f}")
            else:
                out.append(str(value))
        return out


class StudyConfig(BaseModel):
    """Random-polygon validity and accuracy study."""

    count: int = Field(default=100, ge=1)
    n_points: int = Field(default=8000, ge=3)
    n_vertices: int = Field(default=48, ge=3)
    max_holes: int = Field(default=5, ge=0)

    # Fraction of polygons that get 1..max_holes holes
    hole_fraction: float = Field(default=0.5, ge=0.0, le=1.0)
    spikiness_range: tuple[float, float] = (0.0, 0.95)
    error_samples: int = Field(default=20_000, ge=1)
    seed: int = 0


class StudyTrial(BaseModel):
    index: int
    seed: int
    holes: int
    convexity: float
    band: Literal["hi", "mid", "low"]
    valid: bool
    n_polygons: int
    l2_error: float | None
    total_ms: float


class BandSummary(BaseModel):
    band: Literal["hi", "mid", "low"]
    count: int
    valid_count: int
    l2_mean: float | None
    l2_std: float | None
    l2_max: float | None
    total_ms_mean: float


class StudyResults(BaseModel):
    config: StudyConfig
    trials: list[StudyTrial]
    bands: list[BandSummary]

    @property
    def all_valid(self) -> bool:
        return all(t.valid for t in self.trials)
