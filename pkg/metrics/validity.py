"""OGC-style validity audit of a polygon given as point-index rings."""

import logging

import numpy as np

from geometry.point import Point, PointSet
from geometry.predicates import orient2d_xy
from geometry.primitives import on_segment, segments_intersect, signed_area
from models import LinearRing, Polygon, ValidityReport, Violation, ViolationKind

logger = logging.getLogger(__name__)


def _ring_position(x: float, y: float, ring: LinearRing, ps: PointSet) -> int:
    """1 strictly inside the ring, 0 on it, -1 strictly outside."""
    xs, ys = ps.xs, ps.ys
    inside = False
    for i, j in ring.segments():
        ax, ay, bx, by = xs[i], ys[i], xs[j], ys[j]
        side = orient2d_xy(ax, ay, bx, by, x, y)
        if side == 0 and on_segment((ax, ay), (bx, by), (x, y)):
            return 0
        if ay <= y < by and side > 0:
            inside = not inside
        elif by <= y < ay and side < 0:
            inside = not inside
    return 1 if inside else -1


def _segments(ring: LinearRing, ps: PointSet) -> np.ndarray:
    idx = np.asarray(ring.indices, dtype=np.int64)
    return np.hstack([ps.xy[idx], ps.xy[np.roll(idx, -1)]])


def _bbox_pairs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Index pairs (i, j) whose segment bounding boxes overlap."""
    a_lo = np.minimum(a[:, :2], a[:, 2:])
    a_hi = np.maximum(a[:, :2], a[:, 2:])
    b_lo = np.minimum(b[:, :2], b[:, 2:])
    b_hi = np.maximum(b[:, :2], b[:, 2:])
    overlap = (
        (a_lo[:, None, 0] <= b_hi[None, :, 0])
        & (b_lo[None, :, 0] <= a_hi[:, None, 0])
        & (a_lo[:, None, 1] <= b_hi[None, :, 1])
        & (b_lo[None, :, 1] <= a_hi[:, None, 1])
    )
    return np.argwhere(overlap)


def _self_intersection(ring: LinearRing, ps: PointSet, pts: list[Point]) -> str | None:
    """Describe the first self-intersection of ``ring``, if any."""
    seg = ring.segments()
    n = len(seg)

    # Adjacent segments may only share their common vertex.
    for k in range(n):
        a, b = seg[k]
        c = seg[(k + 1) % n][1]
        if orient2d_xy(*pts[a], *pts[b], *pts[c]) == 0 and (
            on_segment(pts[a], pts[b], pts[c]) or on_segment(pts[b], pts[c], pts[a])
        ):
            return f"segments {k} and {(k + 1) % n} overlap at point {b}"

    arr = _segments(ring, ps)
    for i, j in _bbox_pairs(arr, arr).tolist():
        if j <= i + 1 or (i == 0 and j == n - 1):
            continue
        if segments_intersect(pts[seg[i][0]], pts[seg[i][1]], pts[seg[j][0]], pts[seg[j][1]]):
            return f"segments {i} and {j} intersect"
    return None


def _rings_cross(
    r1: LinearRing, r2: LinearRing, ps: PointSet, pts: list[Point]
) -> bool:
    """True when two rings cross or overlap along a segment.

    Touching at isolated points is allowed.
    """
    s1 = r1.segments()
    s2 = r2.segments()
    for i, j in _bbox_pairs(_segments(r1, ps), _segments(r2, ps)).tolist():
        a, b = pts[s1[i][0]], pts[s1[i][1]]
        c, d = pts[s2[j][0]], pts[s2[j][1]]
        d1 = orient2d_xy(*c, *d, *a)
        d2 = orient2d_xy(*c, *d, *b)
        d3 = orient2d_xy(*a, *b, *c)
        d4 = orient2d_xy(*a, *b, *d)
        if d1 * d2 < 0 and d3 * d4 < 0:
            return True
        if d1 == 0 and d2 == 0:
            # Collinear: overlapping interiors share more than one point.
            if a[0] != b[0]:
                lo, hi = sorted((a[0], b[0]))
                olo, ohi = sorted((c[0], d[0]))
            else:
                lo, hi = sorted((a[1], b[1]))
                olo, ohi = sorted((c[1], d[1]))
            if max(lo, olo) < min(hi, ohi):
                return True
    return False


def validate_polygon(p: Polygon, ps: PointSet) -> ValidityReport:
    """Audit ``p`` and report every violation found.

    Checks ring length, zero-length edges, ring simplicity, winding (shell
    counterclockwise, holes clockwise), hole containment in the shell and
    holes nested in other holes. Rings that are too short skip the
    remaining checks.
    """
    violations: list[Violation] = []
    xs, ys = ps.xs, ps.ys
    pts = ps.points()
    rings = p.rings()
    sound: list[int] = []

    for k, ring in enumerate(rings):
        if len(ring) < 3:
            violations.append(
                Violation(ring=k, kind=ViolationKind.TOO_SHORT, detail=f"{len(ring)} vertices")
            )
            continue

        degenerate = [
            (i, j) for i, j in ring.segments() if xs[i] == xs[j] and ys[i] == ys[j]
        ]
        if degenerate:
            violations.append(
                Violation(
                    ring=k,
                    kind=ViolationKind.DEGENERATE_EDGE,
                    detail=f"zero-length edge {degenerate[0]}",
                )
            )
            continue

        detail = _self_intersection(ring, ps, pts)
        if detail is not None:
            violations.append(
                Violation(ring=k, kind=ViolationKind.SELF_INTERSECTION, detail=detail)
            )

        area = signed_area(ring, ps)
        if (k == 0 and area <= 0.0) or (k > 0 and area >= 0.0):
            violations.append(
                Violation(
                    ring=k,
                    kind=ViolationKind.BAD_WINDING,
                    detail=f"signed area {area:.6g}",
                )
            )
        sound.append(k)

    shell_ok = 0 in sound
    holes = [k for k in sound if k > 0]

    for k in holes:
        hole = rings[k]
        if shell_ok:
            outside = [
                i for i in hole.indices if _ring_position(xs[i], ys[i], p.shell, ps) < 0
            ]
            if outside:
                violations.append(
                    Violation(
                        ring=k,
                        kind=ViolationKind.HOLE_OUTSIDE_SHELL,
                        detail=f"vertex {outside[0]} is outside the shell",
                    )
                )
            elif _rings_cross(p.shell, hole, ps, pts):
                violations.append(
                    Violation(
                        ring=k,
                        kind=ViolationKind.SELF_INTERSECTION,
                        detail="hole crosses the shell",
                    )
                )

        for other in holes:
            if other == k:
                continue
            nested = [
                i
                for i in hole.indices
                if _ring_position(xs[i], ys[i], rings[other], ps) > 0
            ]
            if nested:
                violations.append(
                    Violation(
                        ring=k,
                        kind=ViolationKind.HOLE_IN_HOLE,
                        detail=f"vertex {nested[0]} is inside hole {other}",
                    )
                )
            elif other > k and _rings_cross(hole, rings[other], ps, pts):
                violations.append(
                    Violation(
                        ring=other,
                        kind=ViolationKind.SELF_INTERSECTION,
                        detail=f"crosses hole {k}",
                    )
                )

    report = ValidityReport(violations=violations)
    if not report.is_valid:
        logger.debug("polygon failed %d checks", len(violations))
    return report
