"""Command-line entrypoint: generate, validate, export, report."""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeVar

import click

from geowind.config import get_settings, setup_logging
from geowind.io.edge_length import EdgeLengthParseError, parse_edge_length
from geowind.io.models import ExportFormat, ExportOptions, ValidationReport
from geowind.model.icosahedron import NonPositiveEdgeLength
from geowind.pipeline.builder import GeoWindPipeline, PipelineResult
from geowind.pipeline.mesh_renderer import (
    ExportIoError,
    MeshRenderer,
    UnsupportedFormat,
    write_bytes,
)
from geowind.pipeline.report_renderer import ReportRenderer

LOGGER = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

EXIT_VALIDATION_FAILED = 1
EXIT_IO_FAILURE = 3


def _edge_length_callback(
    _ctx: click.Context, _param: click.Parameter, value: str | None
) -> Fraction | None:
    if value is None:
        return None
    try:
        return parse_edge_length(value)
    except EdgeLengthParseError as exc:
        raise click.BadParameter(f"{type(exc).__name__}: {exc}") from exc


def _common_options(func: F) -> F:
    func = click.option(
        "--verbose", is_flag=True, default=False, help="Log every pipeline step to stderr."
    )(func)
    func = click.option(
        "--float-digits",
        type=click.IntRange(6, 17),
        help="Significant digits for float output (default from settings, 17).",
    )(func)
    func = click.option(
        "--axis-aligned", is_flag=True, default=False, help="Rotate so the N-S axis maps to +z."
    )(func)
    func = click.option(
        "--output",
        "-o",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Write output to this file instead of stdout.",
    )(func)
    func = click.option(
        "--edge-length",
        callback=_edge_length_callback,
        help="Exact rational edge length such as 1 or 7/3.",
    )(func)
    return func


class _Invocation:
    """Resolved options shared by every command."""

    def __init__(
        self,
        edge_length: Fraction | None,
        output: Path | None,
        axis_aligned: bool,
        float_digits: int | None,
        verbose: bool,
    ) -> None:
        settings = get_settings().geowind
        setup_logging("DEBUG" if verbose else None)
        if edge_length is None:
            try:
                edge_length = parse_edge_length(settings.edge_length)
            except EdgeLengthParseError as exc:
                raise click.BadParameter(
                    f"{type(exc).__name__}: {exc}", param_hint="GEOWIND_EDGE_LENGTH"
                ) from exc
        self.edge_length = edge_length
        self.output = output
        self.axis_aligned = axis_aligned
        self.float_digits = float_digits or settings.float_digits
        self.color = not settings.no_color
        LOGGER.debug(
            "Edge length %s, float digits %s, axis aligned %s",
            self.edge_length,
            self.float_digits,
            self.axis_aligned,
        )

    def options(self, export_format: ExportFormat) -> ExportOptions:
        return ExportOptions(
            format=export_format, axis_aligned=self.axis_aligned, float_digits=self.float_digits
        )

    def pipeline(self, validate: bool) -> PipelineResult:
        pipeline = GeoWindPipeline(self.edge_length)
        try:
            return pipeline.run() if validate else pipeline.construct()
        except NonPositiveEdgeLength as exc:
            raise click.BadParameter(
                f"{type(exc).__name__}: {exc}", param_hint="'--edge-length'"
            ) from exc

    def emit(self, payload: bytes) -> None:
        if self.output is None:
            click.echo(payload.decode("utf-8"), nl=False)
            return
        try:
            write_bytes(payload, self.output)
        except ExportIoError as exc:
            click.echo(f"{type(exc).__name__}: {exc}", err=True)
            raise SystemExit(EXIT_IO_FAILURE) from exc
        click.echo(f"Output written to {self.output}", err=True)


@click.group()
def cli() -> None:
    """Construct and verify the ten-face pole-anchored wing set on a regular icosahedron."""


@cli.command()
@click.option(
    "--format",
    "export_format",
    type=click.Choice(["obj", "stl"], case_sensitive=False),
    default="obj",
    show_default=True,
)
@_common_options
def generate(export_format: str, **kwargs: Any) -> None:
    """Steps 1-2: emit the wing-set mesh."""

    invocation = _Invocation(**kwargs)
    result = invocation.pipeline(validate=False)
    options = invocation.options(ExportFormat(export_format.lower()))
    invocation.emit(MeshRenderer().render(result.wing_set, options))


@cli.command()
@click.option(
    "--format",
    "export_format",
    type=click.Choice([item.value for item in ExportFormat], case_sensitive=False),
    default="obj",
    show_default=True,
)
@_common_options
def export(export_format: str, **kwargs: Any) -> None:
    """Emit the chosen format: obj, stl, csv midpoints, or the json report."""

    invocation = _Invocation(**kwargs)
    options = invocation.options(ExportFormat(export_format.lower()))
    if options.format is ExportFormat.JSON_REPORT:
        if options.axis_aligned:
            raise click.BadParameter(
                f"{UnsupportedFormat.__name__}: reports are written in the standard frame only",
                param_hint="'--axis-aligned'",
            )
        result = invocation.pipeline(validate=True)
        assert result.report is not None
        invocation.emit(ReportRenderer().render(result.report, result.wing_set))
        return
    result = invocation.pipeline(validate=False)
    invocation.emit(MeshRenderer().render(result.wing_set, options))


@cli.command()
@_common_options
@click.pass_context
def report(ctx: click.Context, **kwargs: Any) -> None:
    """Emit the JSON validation report; exit 1 when any check fails."""

    invocation = _Invocation(**kwargs)
    result = invocation.pipeline(validate=True)
    assert result.report is not None
    invocation.emit(ReportRenderer().render(result.report, result.wing_set))
    if not result.report.overall:
        ctx.exit(EXIT_VALIDATION_FAILED)


@cli.command()
@_common_options
@click.pass_context
def validate(ctx: click.Context, **kwargs: Any) -> None:
    """Build, check, and print one line per step; exit 1 when any check fails."""

    invocation = _Invocation(**kwargs)
    result = invocation.pipeline(validate=True)
    assert result.report is not None
    click.echo(_format_summary(result, result.report, invocation.color))
    if not result.report.overall:
        ctx.exit(EXIT_VALIDATION_FAILED)


def _status(passed: bool, color: bool) -> str:
    text = "PASS" if passed else "FAIL"
    if not color:
        return text
    return click.style(text, fg="green" if passed else "red", bold=True)


def _format_summary(result: PipelineResult, report: ValidationReport, color: bool) -> str:
    edge_length = result.model.edge_length
    decagon = report.decagon_check
    maximality = report.maximality_check
    exact_radius = "phi/2" if edge_length == 1 else f"phi/2 * {edge_length.a}"
    lines = [
        f"Step 1: labeled icosahedron built (edge length {edge_length.a})",
        f"Step 2: {len(result.wing_set.faces)} wing faces generated",
        f"Step 3: edge non-sharing: {_status(report.edge_check.passed, color)} "
        f"({report.edge_check.distinct_edges}/{report.edge_check.edge_slots} distinct edges)",
        f"Step 4: face shapes (36/36/108): {_status(report.shape_check.passed, color)}",
        f"Step 5: equatorial decagon: {_status(decagon.passed, color)}",
        f"        decagon radius = {decagon.radius_float:.9g} (exact {exact_radius})",
        f"Step 6: non-intersection: {_status(report.intersection_check.passed, color)} "
        f"({report.intersection_check.pairs_tested} face pairs)",
        f"Maximality: {_status(maximality.passed, color)} "
        f"({maximality.max_per_south} south, {maximality.max_per_north} north, "
        f"{maximality.max_total} total)",
        f"Overall: {_status(report.overall, color)}",
    ]

    if not report.edge_check.passed:
        lines.append("Shared edges:")
        for duplicate in report.edge_check.duplicate_pairs:
            first, second = duplicate.faces
            lines.append(f"  - {''.join(duplicate.edge)} in {first}, {second}")
    failing_faces = [shape.face for shape in report.shape_check.per_face if not shape.passed]
    if failing_faces:
        lines.append("Faces failing the gnomon shape: " + ", ".join(failing_faces))
    if report.intersection_check.offending_pairs:
        lines.append("Overlapping face pairs:")
        for first, second in report.intersection_check.offending_pairs:
            lines.append(f"  - {first} / {second}")

    return "\n".join(lines)


if __name__ == "__main__":  # pragma: no cover - CLI entry guard
    cli()
