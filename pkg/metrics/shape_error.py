"""Monte-Carlo estimate of the normalized symmetric-difference area."""

import logging

import numpy as np

from errors import ZeroAreaError
from geometry.point import PointSet
from metrics.containment import multipolygon_bounds, points_in_multipolygon
from models import ErrorEstimate, MultiPolygon, SamplingConfig

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; equal seeds give equal streams everywhere."""
    return np.random.Generator(np.random.Philox(seed))


def _joint_bounds(
    gt: MultiPolygon, cs: MultiPolygon, ps_gt: PointSet, ps_cs: PointSet
) -> tuple[float, float, float, float]:
    boxes = [multipolygon_bounds(cs, ps_cs)]
    if not gt.is_empty:
        boxes.append(multipolygon_bounds(gt, ps_gt))
    lo_x, lo_y, hi_x, hi_y = zip(*boxes)
    return min(lo_x), min(lo_y), max(hi_x), max(hi_y)


def l2_error(
    gt: MultiPolygon,
    cs: MultiPolygon,
    ps_gt: PointSet,
    ps_cs: PointSet,
    n_samples: int,
    seed: int,
    cfg: SamplingConfig | None = None,
) -> ErrorEstimate:
    """Area((GT - CS) | (CS - GT)) / Area(CS), estimated by uniform sampling.

    Samples cover the joint bounding box of both shapes. Both areas come
    from the same sample stream, so the box area cancels.

    Raises:
        ZeroAreaError: no sample landed in ``cs``.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples}")
    cfg = cfg or SamplingConfig()
    if cs.is_empty:
        raise ZeroAreaError("the extracted shape is empty")

    min_x, min_y, max_x, max_y = _joint_bounds(gt, cs, ps_gt, ps_cs)
    rng = make_rng(seed)

    xor_hits = 0
    cs_hits = 0
    remaining = n_samples
    while remaining > 0:
        size = min(remaining, cfg.chunk_size)
        xy = np.column_stack(
            [rng.uniform(min_x, max_x, size), rng.uniform(min_y, max_y, size)]
        )
        in_gt = points_in_multipolygon(gt, ps_gt, xy)
        in_cs = points_in_multipolygon(cs, ps_cs, xy)
        xor_hits += int(np.count_nonzero(in_gt ^ in_cs))
        cs_hits += int(np.count_nonzero(in_cs))
        remaining -= size

    if cs_hits == 0:
        raise ZeroAreaError("estimated area of the extracted shape is zero")

    error = xor_hits / cs_hits
    logger.debug("l2 error %.5f from %d samples (seed %d)", error, n_samples, seed)
    return ErrorEstimate(l2_error=error, samples_used=n_samples, seed=seed)
