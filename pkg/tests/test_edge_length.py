from fractions import Fraction

import pytest

from geowind.io.edge_length import EdgeLengthParseError, parse_edge_length


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("1", Fraction(1)),
        ("7/3", Fraction(7, 3)),
        (" 14/6 ", Fraction(7, 3)),
        ("0.5", Fraction(1, 2)),
        ("1000000", Fraction(1000000)),
        ("0", Fraction(0)),
        ("-2", Fraction(-2)),
    ],
)
def test_parse_edge_length(raw: str, expected: Fraction) -> None:
    assert parse_edge_length(raw) == expected


@pytest.mark.parametrize("raw", ["", "abc", "1e3", "inf", "nan", "1/0", "7/", "sqrt5", "1.2.3"])
def test_invalid_edge_lengths(raw: str) -> None:
    with pytest.raises(EdgeLengthParseError):
        parse_edge_length(raw)
