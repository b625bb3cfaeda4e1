"""Exact 3D vectors and orientation predicates over Q(sqrt5) coordinates."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from pydantic import GetCoreSchemaHandler
from pydantic_core import CoreSchema, core_schema

from geowind.exact.golden_field import ZERO, GoldenRational, Scalar, field_sign

Point2 = tuple[GoldenRational, GoldenRational]


@dataclass(frozen=True, slots=True)
class ExactVec3:
    """Three exact coordinates; hashable and structurally comparable."""

    x: GoldenRational
    y: GoldenRational
    z: GoldenRational

    @classmethod
    def __get_pydantic_core_schema__(
        cls, _source: Any, _handler: GetCoreSchemaHandler
    ) -> CoreSchema:
        return core_schema.is_instance_schema(cls)

    @classmethod
    def of(cls, x: Scalar, y: Scalar, z: Scalar) -> ExactVec3:
        return cls(GoldenRational.coerce(x), GoldenRational.coerce(y), GoldenRational.coerce(z))

    def __iter__(self) -> Iterator[GoldenRational]:
        return iter((self.x, self.y, self.z))

    def __add__(self, other: ExactVec3) -> ExactVec3:
        return ExactVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: ExactVec3) -> ExactVec3:
        return ExactVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> ExactVec3:
        return ExactVec3(-self.x, -self.y, -self.z)

    def scale(self, factor: Scalar) -> ExactVec3:
        return ExactVec3(self.x * factor, self.y * factor, self.z * factor)

    def dot(self, other: ExactVec3) -> GoldenRational:
        return vec_dot(self, other)

    def cross(self, other: ExactVec3) -> ExactVec3:
        return vec_cross(self, other)

    def sq_norm(self) -> GoldenRational:
        return vec_dot(self, self)

    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero and self.z.is_zero

    def to_floats(self) -> tuple[float, float, float]:
        return (self.x.to_float(), self.y.to_float(), self.z.to_float())


ORIGIN = ExactVec3(ZERO, ZERO, ZERO)


def vec_dot(u: ExactVec3, v: ExactVec3) -> GoldenRational:
    return u.x * v.x + u.y * v.y + u.z * v.z


def vec_cross(u: ExactVec3, v: ExactVec3) -> ExactVec3:
    return ExactVec3(u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x)


def vec_sq_dist(u: ExactVec3, v: ExactVec3) -> GoldenRational:
    delta = u - v
    return vec_dot(delta, delta)


def vec_midpoint(u: ExactVec3, v: ExactVec3) -> ExactVec3:
    return (u + v).scale(GoldenRational.coerce(1) / 2)


def orient3d_value(a: ExactVec3, b: ExactVec3, c: ExactVec3, d: ExactVec3) -> GoldenRational:
    """Exact determinant ``det[b - a, c - a, d - a]`` (six times the signed volume)."""

    return vec_dot(b - a, vec_cross(c - a, d - a))


def orient3d(a: ExactVec3, b: ExactVec3, c: ExactVec3, d: ExactVec3) -> int:
    """Sign of ``det[b - a, c - a, d - a]``; zero iff the four points are coplanar."""

    return field_sign(orient3d_value(a, b, c, d))


def orient2d(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the 2D cross product ``(b - a) x (c - a)``; positive for a left turn."""

    return field_sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


__all__ = [
    "ORIGIN",
    "ExactVec3",
    "Point2",
    "orient2d",
    "orient3d",
    "orient3d_value",
    "vec_cross",
    "vec_dot",
    "vec_midpoint",
    "vec_sq_dist",
]
