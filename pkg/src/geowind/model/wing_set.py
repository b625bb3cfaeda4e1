"""Generation of the ten pole-anchored wing faces and their representative points."""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict, model_validator

from geowind.exact.geometry import ExactVec3, vec_midpoint
from geowind.io.models import Pole, WingFace, lower, upper
from geowind.model.icosahedron import LabeledIcosahedron

LOGGER = logging.getLogger(__name__)


def south_face(i: int) -> WingFace:
    """F_S(i) = (S, U_i, L_i)."""

    return WingFace(pole=Pole.SOUTH, index=i, vertices=("S", upper(i), lower(i)))


def north_face(i: int) -> WingFace:
    """F_N(i) = (N, U_i, L_(i-1)), with L_0 = L_5."""

    return WingFace(pole=Pole.NORTH, index=i, vertices=("N", upper(i), lower(i - 1)))


class WingSet(BaseModel):
    """Faces in output order (South 1-5, then North 1-5) bound to their model."""

    model_config = ConfigDict(frozen=True)

    faces: list[WingFace]
    model: LabeledIcosahedron

    @model_validator(mode="after")
    def _check_faces(self) -> WingSet:
        if not self.faces:
            raise ValueError("a wing set needs at least one face")
        return self

    def positions(self, face: WingFace) -> tuple[ExactVec3, ExactVec3, ExactVec3]:
        a, b, c = face.vertices
        return (self.model.position(a), self.model.position(b), self.model.position(c))

    def face(self, name: str) -> WingFace:
        for candidate in self.faces:
            if candidate.name == name:
                return candidate
        raise KeyError(name)


def generate_wing_set(model: LabeledIcosahedron) -> WingSet:
    faces = [south_face(i) for i in range(1, 6)] + [north_face(i) for i in range(1, 6)]
    LOGGER.debug("Generated %s wing faces", len(faces))
    return WingSet(faces=faces, model=model)


def representative_point(ws: WingSet, face: WingFace) -> ExactVec3:
    """p(F): exact midpoint of the face's cross-edge."""

    p, q = face.cross_edge
    return vec_midpoint(ws.model.position(p), ws.model.position(q))


def representative_points(ws: WingSet) -> list[ExactVec3]:
    return [representative_point(ws, face) for face in ws.faces]


__all__ = [
    "WingSet",
    "generate_wing_set",
    "north_face",
    "representative_point",
    "representative_points",
    "south_face",
]
