"""Aggregate every check into one report."""

from __future__ import annotations

import logging

from geowind.io.models import ValidationReport
from geowind.model.icosahedron import LabeledIcosahedron
from geowind.model.wing_set import WingSet
from geowind.validation.combinatorial import check_edge_disjoint, check_maximality
from geowind.validation.intersection import check_non_intersection
from geowind.validation.metric import check_decagon, check_face_shapes

LOGGER = logging.getLogger(__name__)


def run_all(model: LabeledIcosahedron, ws: WingSet) -> ValidationReport:
    """Run steps 3-6 and the maximality oracle; failures are reported, never raised."""

    report = ValidationReport(
        edge_check=check_edge_disjoint(ws),
        shape_check=check_face_shapes(ws),
        decagon_check=check_decagon(ws),
        maximality_check=check_maximality(model),
        intersection_check=check_non_intersection(ws),
    )
    LOGGER.info("Validation finished: overall=%s", report.overall)
    return report


__all__ = ["run_all"]
