"""Pipeline that builds the model, generates the wing set and validates it."""

from __future__ import annotations

import logging
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from geowind.exact.golden_field import GoldenRational, Scalar
from geowind.io.models import ValidationReport
from geowind.model.icosahedron import LabeledIcosahedron, build_icosahedron
from geowind.model.wing_set import WingSet, generate_wing_set
from geowind.validation.runner import run_all

LOGGER = logging.getLogger(__name__)


class PipelineResult(BaseModel):
    """Aggregated output from an end-to-end run."""

    model_config = ConfigDict(frozen=True)

    model: LabeledIcosahedron
    wing_set: WingSet
    report: ValidationReport | None = None

    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.overall


class GeoWindPipeline:
    """High-level orchestration of wing-face generation and validation."""

    def __init__(
        self,
        edge_length: Scalar,
        model_builder: Callable[[Scalar], LabeledIcosahedron] = build_icosahedron,
        face_generator: Callable[[LabeledIcosahedron], WingSet] = generate_wing_set,
        validator: Callable[[LabeledIcosahedron, WingSet], ValidationReport] = run_all,
    ) -> None:
        self._edge_length = GoldenRational.coerce(edge_length)
        self._build_model = model_builder
        self._generate_faces = face_generator
        self._validate = validator

    def construct(self) -> PipelineResult:
        """Steps 1-2: labeled icosahedron and the ten faces."""

        LOGGER.info("Step 1: building labeled icosahedron with edge length %s", self._edge_length)
        model = self._build_model(self._edge_length)
        LOGGER.info("Step 2: generating wing faces")
        wing_set = self._generate_faces(model)
        return PipelineResult(model=model, wing_set=wing_set)

    def run(self) -> PipelineResult:
        """Steps 1-6 plus the maximality oracle."""

        constructed = self.construct()
        report = self._validate(constructed.model, constructed.wing_set)
        for step, check in (
            (3, report.edge_check),
            (4, report.shape_check),
            (5, report.decagon_check),
            (6, report.intersection_check),
        ):
            LOGGER.info("Step %s: %s", step, "pass" if check.passed else "FAIL")
        LOGGER.info("Maximality: %s", "pass" if report.maximality_check.passed else "FAIL")
        return constructed.model_copy(update={"report": report})


__all__ = ["GeoWindPipeline", "PipelineResult"]
