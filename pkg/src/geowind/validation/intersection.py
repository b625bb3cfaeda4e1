"""Exact open-interior triangle-triangle overlap (step 6)."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations

from geowind.exact.geometry import ExactVec3, Point2, orient2d, orient3d_value, vec_cross, vec_dot
from geowind.exact.golden_field import GoldenRational, field_sign
from geowind.io.models import IntersectionCheck
from geowind.model.wing_set import WingSet

LOGGER = logging.getLogger(__name__)

Triangle = tuple[ExactVec3, ExactVec3, ExactVec3]


def _normal(triangle: Triangle) -> ExactVec3:
    a, b, c = triangle
    return vec_cross(b - a, c - a)


def _chord(triangle: Triangle, heights: Sequence[GoldenRational]) -> list[ExactVec3] | None:
    """Endpoints of the triangle's cut by a plane, given signed vertex heights above it.

    Returns ``None`` unless vertices lie strictly on both sides; touching at a vertex or
    along an edge leaves the open interior untouched.
    """

    signs = [field_sign(height) for height in heights]
    if not (1 in signs and -1 in signs):
        return None
    points = [triangle[k] for k in range(3) if signs[k] == 0]
    for k, m in ((0, 1), (1, 2), (2, 0)):
        if signs[k] * signs[m] < 0:
            t = heights[k] / (heights[k] - heights[m])
            points.append(triangle[k] + (triangle[m] - triangle[k]).scale(t))
    return points


def _project(point: ExactVec3, dropped: int) -> Point2:
    coordinates = (point.x, point.y, point.z)
    kept = [coordinates[axis] for axis in range(3) if axis != dropped]
    return (kept[0], kept[1])


def _separated(first: Sequence[Point2], second: Sequence[Point2]) -> bool:
    """True when an edge line of ``first`` has all of ``second`` on its closed outer side."""

    for k in range(3):
        p, q, r = first[k], first[(k + 1) % 3], first[(k + 2) % 3]
        inside = orient2d(p, q, r)
        if all(orient2d(p, q, vertex) * inside <= 0 for vertex in second):
            return True
    return False


def _coplanar_overlap(t1: Triangle, t2: Triangle, normal: ExactVec3) -> bool:
    magnitudes = [abs(component) for component in normal]
    dropped = max(range(3), key=lambda axis: (magnitudes[axis], -axis))
    first = [_project(point, dropped) for point in t1]
    second = [_project(point, dropped) for point in t2]
    return not (_separated(first, second) or _separated(second, first))


def interiors_overlap(t1: Triangle, t2: Triangle) -> bool:
    """Whether the open interiors of two triangles share a point.

    Shared vertices and boundary contact do not count. Degenerate triangles have no interior.
    """

    n1, n2 = _normal(t1), _normal(t2)
    if n1.is_zero() or n2.is_zero():
        return False

    heights_2 = [orient3d_value(*t1, point) for point in t2]
    if all(height.is_zero for height in heights_2):
        return _coplanar_overlap(t1, t2, n1)

    chord_2 = _chord(t2, heights_2)
    if chord_2 is None:
        return False
    chord_1 = _chord(t1, [orient3d_value(*t2, point) for point in t1])
    if chord_1 is None:
        return False

    # Both open chords lie on the planes' common line; compare them along its direction.
    direction = vec_cross(n1, n2)
    low_1, high_1 = sorted(vec_dot(point, direction) for point in chord_1)
    low_2, high_2 = sorted(vec_dot(point, direction) for point in chord_2)
    return max(low_1, low_2) < min(high_1, high_2)


def check_non_intersection(ws: WingSet) -> IntersectionCheck:
    offending: list[tuple[str, str]] = []
    pairs = list(combinations(ws.faces, 2))
    for first, second in pairs:
        if interiors_overlap(ws.positions(first), ws.positions(second)):
            offending.append((first.name, second.name))
    if offending:
        LOGGER.debug("Overlapping face interiors: %s", offending)
    return IntersectionCheck(
        passed=not offending, pairs_tested=len(pairs), offending_pairs=offending
    )


__all__ = ["Triangle", "check_non_intersection", "interiors_overlap"]
