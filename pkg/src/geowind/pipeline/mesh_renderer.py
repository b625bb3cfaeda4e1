"""OBJ, ASCII STL, and midpoint CSV renderers for the wing set."""

from __future__ import annotations

import csv
import io
import logging
from pathlib import Path

import numpy as np
import numpy.typing as npt

from geowind import __version__
from geowind.exact.geometry import ExactVec3, vec_cross, vec_dot
from geowind.exact.golden_field import field_sign, sqrt_to_float
from geowind.io.models import LABELS, ExportFormat, ExportOptions, WingFace
from geowind.model.wing_set import WingSet, representative_point

LOGGER = logging.getLogger(__name__)

FloatMatrix = npt.NDArray[np.float64]

CSV_HEADER = ("face", "pole", "index", "mx", "my", "mz", "sq_radius_exact", "radius_float")
MESH_FORMATS = (ExportFormat.OBJ, ExportFormat.STL_ASCII)


class UnsupportedFormat(ValueError):
    """Raised when a renderer is asked for a format it does not produce."""


class ExportIoError(RuntimeError):
    """Raised when rendered output cannot be written."""


def format_float(value: float, digits: int) -> str:
    """``%g``-style rendering with ``digits`` significant digits and no negative zero."""

    return format(value + 0.0, f".{digits}g")


def alignment_rotation(axis: ExactVec3) -> FloatMatrix:
    """Float rotation taking the direction of ``axis`` to +z (Rodrigues' formula)."""

    direction = np.array(axis.to_floats(), dtype=np.float64)
    direction /= np.linalg.norm(direction)
    target = np.array([0.0, 0.0, 1.0])
    cosine = float(direction @ target)
    if np.isclose(cosine, -1.0):
        return np.diag([1.0, -1.0, -1.0])
    v = np.cross(direction, target)
    skew = np.array([[0.0, -v[2], v[1]], [v[2], 0.0, -v[0]], [-v[1], v[0], 0.0]])
    rotation: FloatMatrix = np.eye(3) + skew + skew @ skew / (1.0 + cosine)
    return rotation


def write_bytes(payload: bytes, path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
    except OSError as exc:
        raise ExportIoError(f"Failed to write {path}: {exc}") from exc
    LOGGER.info("Wrote %s bytes to %s", len(payload), path)
    return path


class MeshRenderer:
    """Render the wing set into mesh or midpoint-table bytes."""

    def render(self, ws: WingSet, options: ExportOptions) -> bytes:
        if options.format is ExportFormat.OBJ:
            text = self._render_obj(ws, options)
        elif options.format is ExportFormat.STL_ASCII:
            text = self._render_stl(ws, options)
        elif options.format is ExportFormat.CSV_MIDPOINTS:
            text = self._render_csv(ws, options)
        else:
            raise UnsupportedFormat(f"MeshRenderer does not produce {options.format.value}")
        return text.encode("utf-8")

    def write(self, ws: WingSet, options: ExportOptions, path: Path) -> Path:
        return write_bytes(self.render(ws, options), path)

    @staticmethod
    def _frame(ws: WingSet, options: ExportOptions) -> FloatMatrix:
        if options.axis_aligned:
            return alignment_rotation(ws.model.axis)
        return np.eye(3)

    @staticmethod
    def _coordinates(point: ExactVec3, frame: FloatMatrix) -> FloatMatrix:
        return frame @ np.array(point.to_floats(), dtype=np.float64)

    def _render_obj(self, ws: WingSet, options: ExportOptions) -> str:
        frame = self._frame(ws, options)
        digits = options.float_digits
        lines = [
            f"# geowind {__version__}",
            f"# edge_length {ws.model.edge_length.a}",
            f"# frame {'axis-aligned (float rotation)' if options.axis_aligned else 'standard'}",
        ]
        for label in LABELS:
            x, y, z = self._coordinates(ws.model.position(label), frame)
            lines.append(
                f"v {format_float(x, digits)} {format_float(y, digits)} {format_float(z, digits)}"
            )
        index = {label: position for position, label in enumerate(LABELS, start=1)}
        for face in ws.faces:
            a, b, c = (index[label] for label in self._outward(ws, face))
            lines.append(f"f {a} {b} {c}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def _outward(ws: WingSet, face: WingFace) -> tuple[str, str, str]:
        """Vertex order whose right-hand normal points away from the center O."""

        a, b, c = ws.positions(face)
        normal = vec_cross(b - a, c - a)
        if field_sign(vec_dot(normal, a + b + c)) < 0:
            first, second, third = face.vertices
            return (first, third, second)
        return face.vertices

    def _render_stl(self, ws: WingSet, options: ExportOptions) -> str:
        frame = self._frame(ws, options)
        digits = options.float_digits
        lines = ["solid geowind"]
        for face in ws.faces:
            labels = self._outward(ws, face)
            corners = [self._coordinates(ws.model.position(label), frame) for label in labels]
            normal = np.cross(corners[1] - corners[0], corners[2] - corners[0])
            normal /= np.linalg.norm(normal)
            lines.append("  facet normal " + " ".join(format_float(v, digits) for v in normal))
            lines.append("    outer loop")
            for corner in corners:
                lines.append("      vertex " + " ".join(format_float(v, digits) for v in corner))
            lines.append("    endloop")
            lines.append("  endfacet")
        lines.append("endsolid geowind")
        return "\n".join(lines) + "\n"

    def _render_csv(self, ws: WingSet, options: ExportOptions) -> str:
        frame = self._frame(ws, options)
        digits = options.float_digits
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for face in ws.faces:
            point = representative_point(ws, face)
            sq_radius = point.sq_norm()
            writer.writerow(
                [
                    face.name,
                    face.pole.value,
                    face.index,
                    *(format_float(v, digits) for v in self._coordinates(point, frame)),
                    str(sq_radius),
                    format_float(sqrt_to_float(sq_radius), digits),
                ]
            )
        return buffer.getvalue()


def export_mesh(ws: WingSet, opts: ExportOptions) -> bytes:
    """OBJ or ASCII STL bytes; any other format is rejected."""

    if opts.format not in MESH_FORMATS:
        raise UnsupportedFormat(f"{opts.format.value} is not a mesh format")
    return MeshRenderer().render(ws, opts)


def export_midpoints(ws: WingSet, opts: ExportOptions) -> bytes:
    """CSV table of the ten representative points."""

    return MeshRenderer().render(ws, opts.model_copy(update={"format": ExportFormat.CSV_MIDPOINTS}))


__all__ = [
    "CSV_HEADER",
    "ExportIoError",
    "MeshRenderer",
    "UnsupportedFormat",
    "alignment_rotation",
    "export_mesh",
    "export_midpoints",
    "format_float",
    "write_bytes",
]
