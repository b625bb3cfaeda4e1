import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import pytest

from geowind import __version__
from geowind.exact.golden_field import GoldenRational
from geowind.io.models import LABELS
from geowind.pipeline.builder import GeoWindPipeline, PipelineResult
from geowind.pipeline.report_renderer import ReportRenderer, export_report


def _result(edge_length: int | Fraction = 1) -> PipelineResult:
    return GeoWindPipeline(edge_length).run()


def _payload(result: PipelineResult) -> dict[str, Any]:
    assert result.report is not None
    return json.loads(export_report(result.report, result.wing_set))


def test_report_sections_and_order() -> None:
    payload = _payload(_result())

    assert list(payload) == [
        "model",
        "edge_check",
        "shape_check",
        "decagon_check",
        "maximality_check",
        "intersection_check",
        "overall",
    ]
    assert payload["overall"] is True
    assert payload["edge_check"]["pass"] is True
    assert "passed" not in payload["edge_check"]


def test_model_section() -> None:
    model = _payload(_result(Fraction(7, 3)))["model"]

    assert model["tool"] == "geowind"
    assert model["version"] == __version__
    assert model["frame"] == "standard"
    assert model["edge_length"] == {"exact": "7/3 + 0*sqrt5", "float": 7 / 3}
    assert list(model["vertices"]) == list(LABELS)
    assert model["upper_ring"] == ["U1", "U2", "U3", "U4", "U5"]
    assert [face["name"] for face in model["faces"]][:2] == ["S1", "S2"]
    assert model["faces"][5]["cross_edge"] == ["U1", "L5"]


def test_exact_values_carry_float_twins() -> None:
    result = _result()
    decagon = _payload(result)["decagon_check"]

    assert decagon["sq_radius"]["exact"] == "3/8 + 1/8*sqrt5"
    assert GoldenRational.parse(decagon["adjacent_cos"]["exact"]) == GoldenRational(
        Fraction(1, 4), Fraction(1, 4)
    )
    assert decagon["radius_float"] == 0.8090169943749475
    assert len(decagon["adjacent_dots"]) == 10


def test_vertex_coordinates_parse_back_exactly() -> None:
    result = _result(2)
    vertices = _payload(result)["model"]["vertices"]

    for label in LABELS:
        parsed = [GoldenRational.parse(component["exact"]) for component in vertices[label]]
        assert parsed == list(result.model.position(label))


def test_report_is_byte_identical_across_runs() -> None:
    first, second = _result(Fraction(7, 3)), _result(Fraction(7, 3))
    assert first.report is not None and second.report is not None

    assert ReportRenderer().render(first.report, first.wing_set) == ReportRenderer().render(
        second.report, second.wing_set
    )


def test_write_report(tmp_path: Path) -> None:
    result = _result()
    assert result.report is not None

    path = ReportRenderer().write(result.report, result.wing_set, tmp_path / "out" / "report.json")

    assert json.loads(path.read_text(encoding="utf-8"))["overall"] is True


def test_floats_beyond_the_double_range_are_written_as_null() -> None:
    result = _result(10**310)
    assert result.report is not None

    text = ReportRenderer().render(result.report, result.wing_set).decode("utf-8")
    payload = json.loads(text)

    assert "Infinity" not in text
    assert payload["overall"] is True
    assert payload["model"]["edge_length"] == {"exact": f"{10**310} + 0*sqrt5", "float": None}
    assert payload["decagon_check"]["radius_float"] is None
    assert payload["decagon_check"]["sq_radius"]["float"] is None
    assert payload["decagon_check"]["spacing_deg_float"] == pytest.approx(36.0, abs=1e-12)
