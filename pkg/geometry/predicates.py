"""Exact-sign orientation and incircle predicates.

Each predicate first evaluates its determinant in floating point and accepts
the sign when the magnitude clears a forward error bound (Shewchuk's stage-A
bounds). Otherwise the determinant is recomputed exactly with Fraction, which
represents every finite float without rounding. The exact path only runs for
nearly degenerate inputs, so the common case stays a handful of flops.

The ``*_xy`` variants take raw coordinates and return -1/0/1; the flip pass
calls them in its inner loop. ``orient2d`` and ``incircle`` wrap them for
Point arguments and return a Sign. ``orient2d_signs`` and ``incircle_signs``
evaluate whole index arrays at once.
"""

from enum import IntEnum
from fractions import Fraction

import numpy as np

from geometry.point import Point

# Unit roundoff of IEEE-754 doubles (half an ulp of 1.0).
_EPSILON = 2.0**-53
_CCW_ERRBOUND_A = (3.0 + 16.0 * _EPSILON) * _EPSILON
_ICC_ERRBOUND_A = (10.0 + 96.0 * _EPSILON) * _EPSILON


class Sign(IntEnum):
    """Sign of a predicate determinant."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _orient2d_exact(ax, ay, bx, by, cx, cy) -> int:
    ax, ay, bx, by, cx, cy = (Fraction(v) for v in (ax, ay, bx, by, cx, cy))
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def orient2d_xy(
    ax: float, ay: float, bx: float, by: float, cx: float, cy: float
) -> int:
    """Sign of (b - a) x (c - a); positive when a, b, c turn counterclockwise."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright

    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        if detright == 0.0:
            # Both products vanished; they may have underflowed.
            return _orient2d_exact(ax, ay, bx, by, cx, cy)
        return _sign(det)

    errbound = _CCW_ERRBOUND_A * detsum
    if det > errbound or -det > errbound:
        return 1 if det > 0.0 else -1
    return _orient2d_exact(ax, ay, bx, by, cx, cy)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    ax, ay, bx, by, cx, cy, dx, dy = (
        Fraction(v) for v in (ax, ay, bx, by, cx, cy, dx, dy)
    )
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )
    return _sign(det)


def incircle_xy(
    ax: float,
    ay: float,
    bx: float,
    by: float,
    cx: float,
    cy: float,
    dx: float,
    dy: float,
) -> int:
    """Positive when d lies strictly inside the circle through CCW a, b, c.

    For a clockwise triangle the sign is reversed.
    """
    adx = ax - dx
    bdx = bx - dx
    cdx = cx - dx
    ady = ay - dy
    bdy = by - dy
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady

    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy

    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (
        alift * (bdxcdy - cdxbdy)
        + blift * (cdxady - adxcdy)
        + clift * (adxbdy - bdxady)
    )
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    errbound = _ICC_ERRBOUND_A * permanent
    if det > errbound or -det > errbound:
        return 1 if det > 0.0 else -1
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def orient2d(a: Point, b: Point, c: Point) -> Sign:
    """Exact orientation of the triple (a, b, c)."""
    return Sign(orient2d_xy(a[0], a[1], b[0], b[1], c[0], c[1]))


def incircle(a: Point, b: Point, c: Point, d: Point) -> Sign:
    """Exact position of d relative to the circumcircle of CCW (a, b, c).

    POSITIVE means strictly inside, ZERO on the circle, NEGATIVE outside.
    """
    return Sign(incircle_xy(a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]))


def orient2d_signs(xy: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """``orient2d_xy`` over index arrays into the (n, 2) array ``xy``.

    Rows the float filter cannot decide are settled one by one exactly.
    """
    ax, ay = xy[a, 0], xy[a, 1]
    bx, by = xy[b, 0], xy[b, 1]
    cx, cy = xy[c, 0], xy[c, 1]
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    errbound = _CCW_ERRBOUND_A * (np.abs(detleft) + np.abs(detright))

    signs = np.sign(det).astype(np.int64)
    for i in np.flatnonzero(np.abs(det) <= errbound):
        signs[i] = _orient2d_exact(ax[i], ay[i], bx[i], by[i], cx[i], cy[i])
    return signs


def incircle_signs(
    xy: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray
) -> np.ndarray:
    """``incircle_xy`` over index arrays into the (n, 2) array ``xy``."""
    adx, ady = xy[a, 0] - xy[d, 0], xy[a, 1] - xy[d, 1]
    bdx, bdy = xy[b, 0] - xy[d, 0], xy[b, 1] - xy[d, 1]
    cdx, cdy = xy[c, 0] - xy[d, 0], xy[c, 1] - xy[d, 1]

    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    cdxady, adxcdy = cdx * ady, adx * cdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy

    det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady)
    permanent = (
        (np.abs(bdxcdy) + np.abs(cdxbdy)) * alift
        + (np.abs(cdxady) + np.abs(adxcdy)) * blift
        + (np.abs(adxbdy) + np.abs(bdxady)) * clift
    )
    errbound = _ICC_ERRBOUND_A * permanent

    signs = np.sign(det).astype(np.int64)
    for i in np.flatnonzero(np.abs(det) <= errbound):
        signs[i] = _incircle_exact(
            *(xy[j, k] for j in (a[i], b[i], c[i], d[i]) for k in (0, 1))
        )
    return signs
