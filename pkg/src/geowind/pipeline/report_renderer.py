"""JSON renderer for validation reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from geowind import __version__
from geowind.exact.golden_field import GoldenRational
from geowind.io.models import (
    LABELS,
    LOWER_LABELS,
    UPPER_LABELS,
    ValidationReport,
    finite_or_none,
)
from geowind.model.wing_set import WingSet
from geowind.pipeline.mesh_renderer import write_bytes


def _exact(value: GoldenRational) -> dict[str, Any]:
    return {"exact": str(value), "float": finite_or_none(value.to_float())}


class ReportRenderer:
    """Serialize a report with stable key order; exact values carry a float twin."""

    def render(self, report: ValidationReport, ws: WingSet) -> bytes:
        payload: dict[str, Any] = {"model": self._model_section(ws)}
        payload.update(report.model_dump(mode="json", by_alias=True))
        text = json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False)
        return (text + "\n").encode("utf-8")

    def write(self, report: ValidationReport, ws: WingSet, path: Path) -> Path:
        return write_bytes(self.render(report, ws), path)

    @staticmethod
    def _model_section(ws: WingSet) -> dict[str, Any]:
        model = ws.model
        return {
            "tool": "geowind",
            "version": __version__,
            "frame": "standard",
            "edge_length": _exact(model.edge_length),
            "upper_ring": list(UPPER_LABELS),
            "lower_ring": list(LOWER_LABELS),
            "vertices": {
                label: [_exact(component) for component in model.position(label)]
                for label in LABELS
            },
            "faces": [
                {
                    "name": face.name,
                    "pole": face.pole.value,
                    "index": face.index,
                    "vertices": list(face.vertices),
                    "cross_edge": list(face.cross_edge),
                }
                for face in ws.faces
            ],
        }


def export_report(report: ValidationReport, ws: WingSet) -> bytes:
    return ReportRenderer().render(report, ws)


__all__ = ["ReportRenderer", "export_report"]
