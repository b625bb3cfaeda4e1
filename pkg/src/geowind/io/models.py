"""Core Pydantic models shared across construction, validation, and export stages."""

from __future__ import annotations

import math
from enum import Enum
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, computed_field, model_validator

from geowind.exact.golden_field import GoldenRational

UPPER_LABELS = ("U1", "U2", "U3", "U4", "U5")
LOWER_LABELS = ("L1", "L2", "L3", "L4", "L5")
LABELS = ("N", "S", *UPPER_LABELS, *LOWER_LABELS)
_LABEL_RANK = {label: rank for rank, label in enumerate(LABELS)}

Edge = tuple[str, str]
Triple = tuple[str, str, str]


def edge_key(p: str, q: str) -> Edge:
    """Unordered label pair in canonical (model label order) form."""

    if p == q:
        raise ValueError(f"degenerate edge {p}{q}")
    return (p, q) if _label_rank(p) <= _label_rank(q) else (q, p)


def _label_rank(label: str) -> tuple[int, str]:
    return (_LABEL_RANK.get(label, len(LABELS)), label)


def upper(i: int) -> str:
    """Label of the upper-ring vertex with cyclic index ``i`` (indices mod 5, 1-based)."""

    return UPPER_LABELS[(i - 1) % 5]


def lower(i: int) -> str:
    """Label of the lower-ring vertex with cyclic index ``i``; ``lower(0) == "L5"``."""

    return LOWER_LABELS[(i - 1) % 5]


def finite_or_none(value: float) -> float | None:
    """JSON has no infinity or NaN; such float twins are written as null."""

    return value if math.isfinite(value) else None


def _serialize_exact(value: GoldenRational) -> dict[str, Any]:
    return {"exact": str(value), "float": finite_or_none(value.to_float())}


ExactValue = Annotated[GoldenRational, PlainSerializer(_serialize_exact, return_type=dict)]
ReportFloat = Annotated[float, PlainSerializer(finite_or_none, return_type=float | None)]


class Pole(str, Enum):
    """Rotation-axis pole that anchors a wing face."""

    NORTH = "N"
    SOUTH = "S"

    @property
    def label(self) -> str:
        return self.value


class WingFace(BaseModel):
    """Triangle of the wing set, stored by vertex labels (pole label first)."""

    model_config = ConfigDict(frozen=True)

    pole: Pole
    index: int = Field(..., ge=1, le=5)
    vertices: Triple

    @model_validator(mode="after")
    def _check_distinct(self) -> WingFace:
        if len(set(self.vertices)) != 3:
            raise ValueError(f"face vertices must be distinct: {self.vertices}")
        return self

    @property
    def name(self) -> str:
        return f"{self.pole.value}{self.index}"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def edges(self) -> tuple[Edge, Edge, Edge]:
        a, b, c = self.vertices
        return (edge_key(a, b), edge_key(b, c), edge_key(a, c))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def cross_edge(self) -> Edge:
        """The edge not incident to the pole."""

        others = [label for label in self.vertices if label != self.pole.label]
        if len(others) == 3:
            # Synthetic faces without the pole vertex: fall back to the last two labels.
            others = list(self.vertices[1:])
        return edge_key(others[0], others[1])


class _CheckModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    passed: bool = Field(..., serialization_alias="pass")


class EdgeDuplicate(BaseModel):
    """An edge appearing in more than one face slot."""

    edge: Edge
    faces: tuple[str, str]


class EdgeCheck(_CheckModel):
    edge_slots: int
    distinct_edges: int
    duplicate_pairs: list[EdgeDuplicate] = Field(default_factory=list)


class FaceShape(BaseModel):
    """Exact side and angle data of one face; index k refers to vertex k / the side opposite it."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    face: str
    passed: bool = Field(..., serialization_alias="pass")
    sq_sides: list[ExactValue]
    cos_angles: list[ExactValue | None]
    angles_deg_float: list[ReportFloat]
    pole_angle_is_36: bool


class ShapeCheck(_CheckModel):
    per_face: list[FaceShape] = Field(default_factory=list)


class DecagonCheck(_CheckModel):
    on_equatorial_plane: bool
    radii_equal: bool
    adjacent_cosines_equal: bool
    sq_radius: ExactValue
    radius_float: ReportFloat
    adjacent_cos: ExactValue
    spacing_deg_float: ReportFloat
    angular_order: list[str] = Field(default_factory=list)
    sq_radii: list[ExactValue] = Field(default_factory=list)
    adjacent_dots: list[ExactValue] = Field(default_factory=list)
    south_pentagon_regular: bool
    north_pentagon_regular: bool
    interlaced: bool


class MaximalityCheck(_CheckModel):
    max_per_south: int
    max_per_north: int
    max_total: int
    candidate_count: int
    pole_apex_36_count: int
    witness: list[Triple] = Field(default_factory=list)
    unconstrained_max_total: int


class IntersectionCheck(_CheckModel):
    pairs_tested: int
    offending_pairs: list[tuple[str, str]] = Field(default_factory=list)


class ValidationReport(BaseModel):
    """Outcome of checks 3-6 plus the maximality oracle."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge_check: EdgeCheck
    shape_check: ShapeCheck
    decagon_check: DecagonCheck
    maximality_check: MaximalityCheck
    intersection_check: IntersectionCheck

    @computed_field  # type: ignore[prop-decorator]
    @property
    def overall(self) -> bool:
        return all(
            check.passed
            for check in (
                self.edge_check,
                self.shape_check,
                self.decagon_check,
                self.maximality_check,
                self.intersection_check,
            )
        )


class ExportFormat(str, Enum):
    """Supported output formats."""

    OBJ = "obj"
    STL_ASCII = "stl"
    CSV_MIDPOINTS = "csv"
    JSON_REPORT = "json"


class ExportOptions(BaseModel):
    """Serialization switches shared by all renderers."""

    format: ExportFormat = ExportFormat.OBJ
    axis_aligned: bool = Field(default=False, description="Rotate so N - S maps to +z.")
    float_digits: int = Field(default=17, ge=6, le=17)


__all__ = [
    "LABELS",
    "LOWER_LABELS",
    "UPPER_LABELS",
    "DecagonCheck",
    "Edge",
    "EdgeCheck",
    "EdgeDuplicate",
    "ExactValue",
    "ExportFormat",
    "ExportOptions",
    "ReportFloat",
    "FaceShape",
    "IntersectionCheck",
    "MaximalityCheck",
    "Pole",
    "ShapeCheck",
    "Triple",
    "ValidationReport",
    "WingFace",
    "edge_key",
    "lower",
    "upper",
]
