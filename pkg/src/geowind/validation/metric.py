"""Metric checks: golden-gnomon face shape and equatorial decagon closure."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from functools import cmp_to_key

from geowind.exact.geometry import ExactVec3, vec_cross, vec_dot, vec_sq_dist
from geowind.exact.golden_field import (
    HALF_PHI,
    ONE,
    PHI,
    ZERO,
    GoldenRational,
    field_sign,
    field_sqrt_exact,
    sqrt_to_float,
)
from geowind.io.models import DecagonCheck, FaceShape, Pole, ShapeCheck, WingFace
from geowind.model.wing_set import WingSet, representative_points

LOGGER = logging.getLogger(__name__)

COS_36 = HALF_PHI
COS_72 = (PHI - ONE) / 2
COS_108 = (ONE - PHI) / 2


def _degrees(cosine: float) -> float:
    return math.degrees(math.acos(max(-1.0, min(1.0, cosine))))


def _vertex_cosine(
    opposite: GoldenRational, side_b: GoldenRational, side_c: GoldenRational
) -> tuple[GoldenRational | None, float]:
    """Law of cosines from squared sides; the exact value exists when b^2 c^2 is a field square."""

    numerator = side_b + side_c - opposite
    root = field_sqrt_exact(side_b * side_c)
    if root is not None and not root.is_zero:
        cosine = numerator / (root * 2)
        return cosine, _degrees(cosine.to_float())
    product = side_b.to_float() * side_c.to_float()
    if product <= 0.0:
        return None, math.nan
    return None, _degrees(numerator.to_float() / (2.0 * math.sqrt(product)))


def face_shape(ws: WingSet, face: WingFace) -> FaceShape:
    """Exact squared sides (opposite each vertex) and vertex cosines of one face."""

    points = ws.positions(face)
    sq_sides = [vec_sq_dist(points[(k + 1) % 3], points[(k + 2) % 3]) for k in range(3)]
    cosines: list[GoldenRational | None] = []
    angles: list[float] = []
    for k in range(3):
        cosine, angle = _vertex_cosine(sq_sides[k], sq_sides[(k + 1) % 3], sq_sides[(k + 2) % 3])
        cosines.append(cosine)
        angles.append(angle)

    sq_edge = ws.model.edge_length * ws.model.edge_length
    sides_match = sorted(sq_sides) == sorted([sq_edge, sq_edge, PHI * PHI * sq_edge])
    exact_cosines = [cosine for cosine in cosines if cosine is not None]
    cosines_match = len(exact_cosines) == 3 and sorted(exact_cosines) == sorted(
        [COS_36, COS_36, COS_108]
    )
    pole = face.pole.label
    pole_36 = pole in face.vertices and cosines[face.vertices.index(pole)] == COS_36
    return FaceShape(
        face=face.name,
        passed=sides_match and cosines_match and pole_36,
        sq_sides=sq_sides,
        cos_angles=cosines,
        angles_deg_float=angles,
        pole_angle_is_36=pole_36,
    )


def check_face_shapes(ws: WingSet) -> ShapeCheck:
    """Step 4: sides (l, l, phi l), angles (36, 36, 108), 36 degrees at the pole."""

    per_face = [face_shape(ws, face) for face in ws.faces]
    failing = [shape.face for shape in per_face if not shape.passed]
    if failing:
        LOGGER.debug("Faces failing the gnomon shape: %s", failing)
    return ShapeCheck(passed=not failing, per_face=per_face)


def _angular_order(points: Sequence[ExactVec3], axis: ExactVec3) -> list[int]:
    """Exact angle order about ``axis``, starting from the first point's direction.

    Points sort by half-plane of the projection basis, then by the sign of the 2D cross
    product, so the order does not depend on the scale of the coordinates.
    """

    reference = points[0] - axis.scale(vec_dot(points[0], axis) / vec_dot(axis, axis))
    if reference.is_zero():
        return list(range(len(points)))
    normal = vec_cross(axis, reference)
    planar = [(vec_dot(point, reference), vec_dot(point, normal)) for point in points]

    def half(k: int) -> int:
        u, v = planar[k]
        sign_v = field_sign(v)
        if sign_v == 0 and u.is_zero:
            return -1
        return 0 if sign_v > 0 or (sign_v == 0 and field_sign(u) >= 0) else 1

    def compare(i: int, j: int) -> int:
        if half(i) != half(j):
            return half(i) - half(j)
        (u_i, v_i), (u_j, v_j) = planar[i], planar[j]
        turn = field_sign(u_i * v_j - v_i * u_j)
        if turn:
            return -turn
        return i - j

    return sorted(range(len(points)), key=cmp_to_key(compare))


def _ring_is_regular(
    points: Sequence[ExactVec3],
    order: Sequence[int],
    sq_radius: GoldenRational,
    cosine: GoldenRational,
) -> bool:
    if any(points[k].sq_norm() != sq_radius for k in order):
        return False
    expected = cosine * sq_radius
    return all(
        vec_dot(points[order[k]], points[order[(k + 1) % len(order)]]) == expected
        for k in range(len(order))
    )


def evaluate_decagon(
    points: Sequence[ExactVec3],
    names: Sequence[str],
    families: Sequence[Pole],
    axis: ExactVec3,
    edge_length: GoldenRational,
) -> DecagonCheck:
    """Decagon closure for explicit points; center is the origin."""

    expected_sq_radius = PHI * PHI * edge_length * edge_length / 4
    on_plane = all(vec_dot(point, axis).is_zero for point in points)
    sq_radii = [point.sq_norm() for point in points]
    radii_equal = all(value == expected_sq_radius for value in sq_radii)

    order = _angular_order(points, axis)
    adjacent_dots = [
        vec_dot(points[order[k]], points[order[(k + 1) % len(order)]]) for k in range(len(order))
    ]
    adjacent_equal = all(dot == COS_36 * expected_sq_radius for dot in adjacent_dots)

    south = [k for k in order if families[k] is Pole.SOUTH]
    north = [k for k in order if families[k] is Pole.NORTH]
    south_regular = len(south) == 5 and _ring_is_regular(points, south, expected_sq_radius, COS_72)
    north_regular = len(north) == 5 and _ring_is_regular(points, north, expected_sq_radius, COS_72)
    interlaced = all(
        families[order[k]] is not families[order[(k + 1) % len(order)]] for k in range(len(order))
    )

    first_sq_radius = sq_radii[order[0]]
    adjacent_cos = ZERO if first_sq_radius.is_zero else adjacent_dots[0] / first_sq_radius
    passed = (
        len(points) == 10
        and on_plane
        and radii_equal
        and adjacent_equal
        and south_regular
        and north_regular
        and interlaced
    )
    return DecagonCheck(
        passed=passed,
        on_equatorial_plane=on_plane,
        radii_equal=radii_equal,
        adjacent_cosines_equal=adjacent_equal,
        sq_radius=first_sq_radius,
        radius_float=sqrt_to_float(first_sq_radius),
        adjacent_cos=adjacent_cos,
        spacing_deg_float=_degrees(adjacent_cos.to_float()),
        angular_order=[names[k] for k in order],
        sq_radii=sq_radii,
        adjacent_dots=adjacent_dots,
        south_pentagon_regular=south_regular,
        north_pentagon_regular=north_regular,
        interlaced=interlaced,
    )


def check_decagon(ws: WingSet) -> DecagonCheck:
    """Step 5: the ten p(F) form a regular decagon of radius (phi / 2) l."""

    return evaluate_decagon(
        representative_points(ws),
        [face.name for face in ws.faces],
        [face.pole for face in ws.faces],
        ws.model.axis,
        ws.model.edge_length,
    )


__all__ = [
    "COS_108",
    "COS_36",
    "COS_72",
    "check_decagon",
    "check_face_shapes",
    "evaluate_decagon",
    "face_shape",
]
