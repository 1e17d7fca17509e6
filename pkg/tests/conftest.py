"""Shared pytest fixtures for the concave polygon test suite."""

import pytest

import sys
from pathlib import Path

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from geometry.point import PointSet
from metrics.generators import generate_random_polygon
from models import FilterConfig, LinearRing, MultiPolygon, Polygon

DATA_DIR = Path(__file__).parent.parent / "data"


def grid_points(
    nx: int, ny: int, dx: float = 0.0, dy: float = 0.0, skip=lambda x, y: False
) -> list[tuple[float, float]]:
    """Integer lattice points, row by row, optionally offset and with gaps."""
    return [
        (float(x) + dx, float(y) + dy)
        for y in range(ny)
        for x in range(nx)
        if not skip(x, y)
    ]


@pytest.fixture
def unit_square_points() -> PointSet:
    """Create the four corners of the unit square, counterclockwise."""
    return PointSet.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def unit_square(unit_square_points) -> tuple[MultiPolygon, PointSet]:
    """Create a unit-square MultiPolygon."""
    polygon = Polygon(shell=LinearRing(indices=[0, 1, 2, 3]))
    return MultiPolygon(polygons=[polygon]), unit_square_points


@pytest.fixture
def grid_3x3() -> PointSet:
    """Create a 3x3 lattice (four unit cells)."""
    return PointSet.from_points(grid_points(3, 3))


@pytest.fixture
def square_annulus_points() -> PointSet:
    """Create a 9x9 lattice with the 3x3 block at 3..5 removed."""
    return PointSet.from_points(
        grid_points(9, 9, skip=lambda x, y: 3 <= x <= 5 and 3 <= y <= 5)
    )


@pytest.fixture
def annulus_config() -> FilterConfig:
    """Create a filter that keeps unit lattice triangles only."""
    return FilterConfig(l_max=1.5)


@pytest.fixture
def two_clusters() -> PointSet:
    """Create two 3x3 lattices ten units apart."""
    return PointSet.from_points(grid_points(3, 3) + grid_points(3, 3, dx=10.0))


@pytest.fixture
def framed_square() -> tuple[Polygon, PointSet]:
    """Create a 10x10 square with a clockwise 2x2 hole in the middle."""
    ps = PointSet.from_points(
        [(0, 0), (10, 0), (10, 10), (0, 10), (4, 4), (4, 6), (6, 6), (6, 4)]
    )
    polygon = Polygon(
        shell=LinearRing(indices=[0, 1, 2, 3]),
        holes=[LinearRing(indices=[4, 5, 6, 7])],
    )
    return polygon, ps


@pytest.fixture
def random_polygon() -> tuple[Polygon, PointSet]:
    """Create a seeded random polygon with two holes."""
    return generate_random_polygon(32, holes=2, seed=3, spikiness=0.3)


@pytest.fixture
def points_csv(tmp_path) -> Path:
    """Create a CSV file with the square annulus lattice."""
    path = tmp_path / "annulus.csv"
    rows = ["x,y"] + [
        f"{x:g},{y:g}"
        for x, y in grid_points(9, 9, skip=lambda x, y: 3 <= x <= 5 and 3 <= y <= 5)
    ]
    path.write_text("\n".join(rows) + "\n")
    return path
