"""Parsing of exact edge lengths given on the command line or in settings."""

from __future__ import annotations

import re
from fractions import Fraction

_EXACT_LENGTH = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+)$")


class EdgeLengthParseError(ValueError):
    """Raised when an edge length is not an exact rational string."""


def parse_edge_length(raw: str) -> Fraction:
    """Parse ``"1"``, ``"7/3"`` or a terminating decimal such as ``"0.5"`` exactly.

    Exponent notation and non-finite values are rejected so no float ever enters the
    field arithmetic. Positivity is checked later, by the model builder.
    """

    candidate = raw.strip().replace(" ", "")
    if not _EXACT_LENGTH.match(candidate):
        raise EdgeLengthParseError(f"edge length must be an exact rational like 7/3, got {raw!r}")
    try:
        return Fraction(candidate)
    except ZeroDivisionError as exc:
        raise EdgeLengthParseError(f"edge length has a zero denominator: {raw!r}") from exc


__all__ = ["EdgeLengthParseError", "parse_edge_length"]
