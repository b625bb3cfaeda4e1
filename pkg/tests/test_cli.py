import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from geowind.cli import cli
from geowind.config import AppSettings, GeoWindSettings
from geowind.io.models import Pole, WingFace
from geowind.model.icosahedron import LabeledIcosahedron
from geowind.model.wing_set import WingSet, generate_wing_set
from geowind.pipeline.builder import GeoWindPipeline


def _use_settings(monkeypatch: pytest.MonkeyPatch, **overrides: object) -> None:
    settings = AppSettings(geowind=GeoWindSettings(_env_file=None, **overrides))
    monkeypatch.setattr("geowind.cli.get_settings", lambda: settings)


def _mutated_faces(model: LabeledIcosahedron) -> WingSet:
    ws = generate_wing_set(model)
    faces = [
        WingFace(pole=Pole.NORTH, index=2, vertices=("N", "U2", "L2"))
        if face.name == "N2"
        else face
        for face in ws.faces
    ]
    return ws.model_copy(update={"faces": faces})


def test_validate_prints_summary(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["validate", "--edge-length", "1"])

    assert result.exit_code == 0
    assert "decagon radius = 0.809016994 (exact phi/2)" in result.output
    assert "Step 1: labeled icosahedron built (edge length 1)" in result.output
    assert "Maximality: PASS (5 south, 5 north, 10 total)" in result.output
    assert result.output.strip().endswith("Overall: PASS")


def test_validate_rejects_non_positive_edge_length(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["validate", "--edge-length", "0"])

    assert result.exit_code == 2
    assert "NonPositiveEdgeLength" in result.output


def test_validate_rejects_float_notation(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["validate", "--edge-length", "1e3"])

    assert result.exit_code == 2
    assert "EdgeLengthParseError" in result.output


def test_validate_exits_one_when_a_check_fails(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)
    monkeypatch.setattr(
        "geowind.cli.GeoWindPipeline",
        lambda edge_length: GeoWindPipeline(edge_length, face_generator=_mutated_faces),
    )

    result = CliRunner().invoke(cli, ["validate"])

    assert result.exit_code == 1
    assert "Overall: FAIL" in result.output
    assert "U2L2 in S2, N2" in result.output


def test_validate_uses_edge_length_from_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch, edge_length="7/3")

    result = CliRunner().invoke(cli, ["validate"])

    assert result.exit_code == 0
    assert "(edge length 7/3)" in result.output
    assert "(exact phi/2 * 7/3)" in result.output


def test_summary_colors_follow_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)
    colored = CliRunner().invoke(cli, ["validate"], color=True)

    _use_settings(monkeypatch, no_color=True)
    plain = CliRunner().invoke(cli, ["validate"], color=True)

    assert "\x1b[" in colored.output
    assert "\x1b[" not in plain.output


def test_report_writes_json(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)
    target = tmp_path / "out.json"

    result = CliRunner().invoke(cli, ["report", "--edge-length", "7/3", "-o", str(target)])

    assert result.exit_code == 0
    payload = json.loads(target.read_text(encoding="utf-8"))
    assert payload["overall"] is True
    assert payload["model"]["edge_length"]["exact"] == "7/3 + 0*sqrt5"


def test_report_is_deterministic(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)
    runner = CliRunner()

    first = runner.invoke(cli, ["report", "--edge-length", "7/3"])
    second = runner.invoke(cli, ["report", "--edge-length", "7/3"])

    assert first.exit_code == second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes


def test_generate_prints_obj(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["generate", "--edge-length", "2"])

    assert result.exit_code == 0
    assert "v 0 1 1.6180339887498949" in result.output
    assert result.output.count("\nf ") == 10


def test_generate_rejects_non_mesh_formats(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["generate", "--format", "csv"])

    assert result.exit_code == 2


@pytest.mark.parametrize(
    ("export_format", "marker"),
    [
        ("obj", "# frame standard"),
        ("stl", "solid geowind"),
        ("csv", "face,pole,index,mx,my,mz,sq_radius_exact,radius_float"),
        ("json", '"overall": true'),
    ],
)
def test_export_formats(
    export_format: str, marker: str, monkeypatch: pytest.MonkeyPatch
) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["export", "--format", export_format])

    assert result.exit_code == 0
    assert marker in result.output


def test_export_json_rejects_axis_alignment(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["export", "--format", "json", "--axis-aligned"])

    assert result.exit_code == 2
    assert "UnsupportedFormat" in result.output


def test_float_digits_option(monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["generate", "--edge-length", "2", "--float-digits", "6"])

    assert result.exit_code == 0
    assert "v 0 1 1.61803" in result.output.splitlines()


def test_unwritable_output_exits_three(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    _use_settings(monkeypatch)
    blocker = tmp_path / "blocker"
    blocker.write_text("file", encoding="utf-8")

    result = CliRunner().invoke(cli, ["generate", "-o", str(blocker / "wings.obj")])

    assert result.exit_code == 3
    assert "ExportIoError" in result.output


@pytest.mark.parametrize("edge_length", ["1000000000000000", "1/100000000000000000000"])
def test_validate_passes_at_extreme_edge_lengths(
    edge_length: str, monkeypatch: pytest.MonkeyPatch
) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["validate", "--edge-length", edge_length])

    assert result.exit_code == 0
    assert "Step 5: equatorial decagon: PASS" in result.output
    assert result.output.strip().endswith("Overall: PASS")


def test_report_with_an_edge_length_past_the_float_range(
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    _use_settings(monkeypatch)

    result = CliRunner().invoke(cli, ["report", "--edge-length", "1" + "0" * 310])

    assert result.exit_code == 0
    assert json.loads(result.output)["model"]["edge_length"]["float"] is None
