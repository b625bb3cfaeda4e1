from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geowind.exact.geometry import ExactVec3
from geowind.exact.golden_field import HALF_PHI, ONE, PHI, GoldenRational
from geowind.io.models import Pole, WingFace
from geowind.model.icosahedron import build_icosahedron
from geowind.model.wing_set import generate_wing_set, representative_points
from geowind.validation.metric import (
    COS_36,
    COS_72,
    COS_108,
    check_decagon,
    check_face_shapes,
    evaluate_decagon,
    face_shape,
)

lengths = st.builds(
    lambda mantissa, exponent: Fraction(mantissa, 7) * Fraction(10) ** exponent,
    st.integers(min_value=1, max_value=999),
    st.integers(min_value=-40, max_value=40),
)


DecagonInputs = tuple[list[ExactVec3], list[str], list[Pole], ExactVec3, GoldenRational]


def _decagon_inputs(edge_length: int | Fraction = 1) -> DecagonInputs:
    ws = generate_wing_set(build_icosahedron(edge_length))
    return (
        representative_points(ws),
        [face.name for face in ws.faces],
        [face.pole for face in ws.faces],
        ws.model.axis,
        ws.model.edge_length,
    )


def test_cosine_constants() -> None:
    assert COS_36 == PHI / 2
    assert COS_72 == (PHI - 1) / 2
    assert COS_108 == (ONE - PHI) / 2
    assert COS_36 - COS_72 == Fraction(1, 2)


def test_every_face_is_a_golden_gnomon() -> None:
    ws = generate_wing_set(build_icosahedron(1))

    result = check_face_shapes(ws)

    assert result.passed
    for shape in result.per_face:
        assert sorted(shape.sq_sides) == [ONE, ONE, PHI * PHI]
        assert sorted(c for c in shape.cos_angles if c is not None) == [COS_108, COS_36, COS_36]
        assert sorted(shape.angles_deg_float) == pytest.approx([36.0, 36.0, 108.0], abs=1e-12)
        assert shape.pole_angle_is_36


def test_south_face_details() -> None:
    ws = generate_wing_set(build_icosahedron(2))

    shape = face_shape(ws, ws.face("S1"))

    # Side k is opposite vertex k of (S, U1, L1).
    assert shape.sq_sides == [4, 4, PHI * PHI * 4]
    assert shape.cos_angles == [HALF_PHI, HALF_PHI, COS_108]


def test_non_gnomon_face_fails_the_shape_check() -> None:
    ws = generate_wing_set(build_icosahedron(1))
    equilateral = WingFace(pole=Pole.NORTH, index=1, vertices=("N", "U1", "U2"))

    shape = face_shape(ws, equilateral)

    assert not shape.passed
    assert shape.sq_sides == [ONE, ONE, ONE]
    assert shape.cos_angles == [Fraction(1, 2)] * 3


def test_decagon_closure() -> None:
    result = check_decagon(generate_wing_set(build_icosahedron(1)))

    assert result.passed
    assert result.on_equatorial_plane
    assert result.radii_equal
    assert result.adjacent_cosines_equal
    assert result.sq_radius == PHI * PHI / 4
    assert f"{result.radius_float:.9g}" == "0.809016994"
    assert result.adjacent_cos == HALF_PHI
    assert result.spacing_deg_float == pytest.approx(36.0, abs=1e-12)
    assert len(result.adjacent_dots) == 10
    assert result.south_pentagon_regular
    assert result.north_pentagon_regular
    assert result.interlaced
    assert sorted(result.angular_order) == sorted(
        f"{pole}{i}" for pole in "SN" for i in range(1, 6)
    )


def test_perturbed_midpoint_breaks_closure() -> None:
    points, names, families, axis, edge_length = _decagon_inputs()
    points[3] = points[3].scale(GoldenRational(Fraction(1000000001, 1000000000)))

    result = evaluate_decagon(points, names, families, axis, edge_length)

    assert not result.passed
    assert result.on_equatorial_plane
    assert not result.radii_equal


def test_translated_midpoint_stays_on_the_plane_but_breaks_the_radius() -> None:
    points, names, families, axis, edge_length = _decagon_inputs()
    points[3] = points[3] + ExactVec3.of(Fraction(1, 1000), 0, 0)

    result = evaluate_decagon(points, names, families, axis, edge_length)

    assert axis.x.is_zero
    assert not result.passed
    assert result.on_equatorial_plane
    assert not result.radii_equal


def test_lifted_midpoint_leaves_the_plane() -> None:
    points, names, families, axis, edge_length = _decagon_inputs()
    points[0] = points[0] + axis.scale(Fraction(1, 10**9))

    result = evaluate_decagon(points, names, families, axis, edge_length)

    assert not result.passed
    assert not result.on_equatorial_plane


def test_swapped_families_are_not_interlaced() -> None:
    points, names, families, axis, edge_length = _decagon_inputs()
    families = [Pole.SOUTH] * 10

    result = evaluate_decagon(points, names, families, axis, edge_length)

    assert result.radii_equal
    assert result.adjacent_cosines_equal
    assert not result.interlaced
    assert not result.passed


@settings(max_examples=25, deadline=None)
@given(lengths)
def test_metric_checks_are_scale_invariant(edge_length: Fraction) -> None:
    ws = generate_wing_set(build_icosahedron(edge_length))

    assert check_face_shapes(ws).passed
    decagon = check_decagon(ws)
    assert decagon.passed
    assert decagon.sq_radius == PHI * PHI * edge_length * edge_length / 4


@pytest.mark.parametrize(
    "edge_length",
    [10**15, 10**50, Fraction(1, 10**20), Fraction(7, 3 * 10**30)],
)
def test_decagon_order_survives_extreme_scales(edge_length: int | Fraction) -> None:
    decagon = check_decagon(generate_wing_set(build_icosahedron(edge_length)))

    assert decagon.passed
    assert decagon.interlaced
    assert [name[0] for name in decagon.angular_order] == ["S", "N"] * 5


def test_exact_cosines_stay_within_the_unit_interval() -> None:
    ws = generate_wing_set(build_icosahedron(Fraction(7, 3)))
    faces = [*ws.faces, WingFace(pole=Pole.NORTH, index=1, vertices=("N", "U1", "U2"))]

    cosines = [c for face in faces for c in face_shape(ws, face).cos_angles if c is not None]
    cosines.append(check_decagon(ws).adjacent_cos)

    assert len(cosines) == 34
    assert all(-1.0 <= cosine.to_float() <= 1.0 for cosine in cosines)
