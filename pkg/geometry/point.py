"""Points and point sets."""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from errors import DuplicatePointError, NonFinitePointError


class Point(NamedTuple):
    """A 2D point; x and y share one arbitrary length unit."""

    x: float
    y: float


def _check_finite_and_distinct(arr: np.ndarray) -> None:
    finite = np.isfinite(arr).all(axis=1)
    if not finite.all():
        index = int(np.flatnonzero(~finite)[0])
        raise NonFinitePointError(index, float(arr[index, 0]), float(arr[index, 1]))

    if len(arr) > 1:
        order = np.lexsort((arr[:, 1], arr[:, 0]))
        ordered = arr[order]
        same = (ordered[1:] == ordered[:-1]).all(axis=1)
        if same.any():
            k = int(np.flatnonzero(same)[0])
            first, second = sorted((int(order[k]), int(order[k + 1])))
            raise DuplicatePointError(
                first, second, float(arr[first, 0]), float(arr[first, 1])
            )


class PointSet(BaseModel):
    """An indexed, immutable array of distinct finite points.

    The index of a point in this set (its point index, PI) is what meshes,
    rings and polygons refer to.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    xy: np.ndarray

    @field_validator("xy", mode="before")
    @classmethod
    def _coerce(cls, value) -> np.ndarray:
        arr = np.array(value, dtype=np.float64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"expected an (n, 2) coordinate array, got {arr.shape}")
        return arr

    def __init__(self, **data):
        # Domain errors must surface unwrapped, not as a ValidationError.
        super().__init__(**data)
        _check_finite_and_distinct(self.xy)
        self.xy.setflags(write=False)

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float]]) -> PointSet:
        """Build a PointSet from an iterable of (x, y) pairs."""
        return cls(xy=[(float(x), float(y)) for x, y in points])

    def __len__(self) -> int:
        return int(self.xy.shape[0])

    def __getitem__(self, index: int) -> Point:
        return Point(self.xs[index], self.ys[index])

    def points(self) -> list[Point]:
        """All points in index order."""
        return [Point(x, y) for x, y in zip(self.xs, self.ys)]

    @cached_property
    def xs(self) -> list[float]:
        """x coordinates as plain floats, for scalar hot loops."""
        return self.xy[:, 0].tolist()

    @cached_property
    def ys(self) -> list[float]:
        """y coordinates as plain floats, for scalar hot loops."""
        return self.xy[:, 1].tolist()

    def bounds(self) -> tuple[float, float, float, float]:
        """Axis-aligned bounding box as (min_x, min_y, max_x, max_y)."""
        if len(self) == 0:
            return (math.nan, math.nan, math.nan, math.nan)
        lo = self.xy.min(axis=0)
        hi = self.xy.max(axis=0)
        return (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))
