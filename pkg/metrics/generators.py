"""Seeded random polygons and uniform samples inside them."""

import logging
import math

import numpy as np

from errors import GenerationError
from geometry.point import PointSet
from metrics.containment import (
    multipolygon_bounds,
    points_in_multipolygon,
    points_in_polygon,
)
from metrics.shape_error import make_rng
from models import LinearRing, MultiPolygon, Polygon, SamplingConfig

logger = logging.getLogger(__name__)

# Hole radius range as a fraction of the shell radius.
HOLE_RADIUS_RANGE = (0.07, 0.14)
# Clearance factor between a hole and the shell or another hole.
HOLE_CLEARANCE = 1.25
MAX_HOLE_ATTEMPTS = 500


def _star_shell(
    rng: np.random.Generator, n_vertices: int, spikiness: float, radius: float
) -> np.ndarray:
    """Vertices at sorted random angles with radii perturbed inward.

    Angles are redrawn until every angular gap, the wrap-around one included,
    is below pi. With a wider gap the origin falls outside the ring, and the
    angular order no longer gives a simple counterclockwise ring.
    """
    while True:
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, n_vertices))
        gaps = np.diff(angles, append=angles[0] + 2.0 * math.pi)
        if gaps.min() > 0.0 and gaps.max() < math.pi:
            break
    radii = radius * (1.0 - spikiness * rng.uniform(0.0, 1.0, n_vertices))
    return np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])


def _distance_to_edges(center: np.ndarray, shell: np.ndarray) -> float:
    a = shell
    b = np.roll(shell, -1, axis=0)
    ab = b - a
    t = np.clip(((center - a) * ab).sum(axis=1) / (ab * ab).sum(axis=1), 0.0, 1.0)
    nearest = a + t[:, None] * ab
    return float(np.sqrt(((nearest - center) ** 2).sum(axis=1)).min())


def _place_holes(
    rng: np.random.Generator,
    shell_poly: Polygon,
    shell_ps: PointSet,
    holes: int,
    radius: float,
) -> list[tuple[np.ndarray, float]]:
    shell = shell_ps.xy
    lo = shell.min(axis=0)
    hi = shell.max(axis=0)
    placed: list[tuple[np.ndarray, float]] = []
    attempts = 0

    while len(placed) < holes:
        attempts += 1
        if attempts > MAX_HOLE_ATTEMPTS * holes:
            raise GenerationError(
                f"placed {len(placed)} of {holes} holes after {attempts - 1} attempts"
            )
        r = radius * rng.uniform(*HOLE_RADIUS_RANGE)
        center = rng.uniform(lo, hi)
        if not points_in_polygon(shell_poly, shell_ps, center[None, :])[0]:
            continue
        if _distance_to_edges(center, shell) <= HOLE_CLEARANCE * r:
            continue
        if any(
            np.hypot(*(center - c)) <= HOLE_CLEARANCE * (r + rc) for c, rc in placed
        ):
            continue
        placed.append((center, r))

    logger.debug("placed %d holes in %d attempts", holes, attempts)
    return placed


def generate_random_polygon(
    n_vertices: int,
    holes: int = 0,
    seed: int = 0,
    spikiness: float = 0.5,
    radius: float = 50.0,
    hole_vertices: int = 16,
) -> tuple[Polygon, PointSet]:
    """Random simple polygon centred on the origin, with optional holes.

    The shell is star-shaped: ``n_vertices`` points at sorted random angles,
    radius ``radius * (1 - spikiness * u)`` with u uniform in [0, 1). Larger
    spikiness gives lower convexity. Holes are clockwise regular polygons
    kept clear of the shell and of each other.

    Raises:
        GenerationError: the holes could not be placed.
    """
    if n_vertices < 3:
        raise ValueError(f"n_vertices must be at least 3, got {n_vertices}")
    if holes < 0:
        raise ValueError(f"holes must be non-negative, got {holes}")
    if not 0.0 <= spikiness < 1.0:
        raise ValueError(f"spikiness must be in [0, 1), got {spikiness}")
    if hole_vertices < 3:
        raise ValueError(f"hole_vertices must be at least 3, got {hole_vertices}")

    rng = make_rng(seed)
    shell_xy = _star_shell(rng, n_vertices, spikiness, radius)
    shell_ps = PointSet(xy=shell_xy)
    shell_ring = LinearRing(indices=list(range(n_vertices)))
    shell_poly = Polygon(shell=shell_ring)

    coords = [shell_xy]
    hole_rings = []
    offset = n_vertices
    for center, r in _place_holes(rng, shell_poly, shell_ps, holes, radius):
        phase = rng.uniform(0.0, 2.0 * math.pi)
        # Decreasing angles wind clockwise.
        angles = phase - np.arange(hole_vertices) * (2.0 * math.pi / hole_vertices)
        coords.append(center + r * np.column_stack([np.cos(angles), np.sin(angles)]))
        hole_rings.append(LinearRing(indices=list(range(offset, offset + hole_vertices))))
        offset += hole_vertices

    ps = PointSet(xy=np.vstack(coords))
    return Polygon(shell=shell_ring, holes=hole_rings), ps


def sample_points_in_multipolygon(
    mp: MultiPolygon,
    ps: PointSet,
    n: int,
    seed: int,
    cfg: SamplingConfig | None = None,
) -> PointSet:
    """Exactly ``n`` distinct points uniform over ``mp`` by rejection sampling.

    Candidates are drawn over the bounding box of all shells; exact
    repeats are discarded and redrawn.

    Raises:
        GenerationError: the acceptance rate is too low to finish.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if mp.is_empty:
        raise GenerationError("cannot sample from an empty shape")
    cfg = cfg or SamplingConfig()
    rng = make_rng(seed)
    min_x, min_y, max_x, max_y = multipolygon_bounds(mp, ps)
    lo = np.array([min_x, min_y])
    hi = np.array([max_x, max_y])

    accepted: list[tuple[float, float]] = []
    seen: set[tuple[float, float]] = set()
    draws = 0
    while len(accepted) < n:
        xy = rng.uniform(lo, hi, size=(cfg.chunk_size, 2))
        draws += cfg.chunk_size
        for x, y in xy[points_in_multipolygon(mp, ps, xy)].tolist():
            if (x, y) in seen:
                continue
            seen.add((x, y))
            accepted.append((x, y))
            if len(accepted) == n:
                break
        if (
            len(accepted) < n
            and draws >= cfg.min_draws
            and len(accepted) / draws < cfg.min_acceptance
        ):
            raise GenerationError(
                f"acceptance rate {len(accepted) / draws:.2e} after {draws} draws"
            )

    logger.debug("sampled %d points from %d draws", n, draws)
    return PointSet(xy=accepted)


def sample_points_in_polygon(
    p: Polygon,
    ps: PointSet,
    n: int,
    seed: int,
    cfg: SamplingConfig | None = None,
) -> PointSet:
    """Exactly ``n`` distinct points uniform over ``p``."""
    return sample_points_in_multipolygon(MultiPolygon(polygons=[p]), ps, n, seed, cfg)
