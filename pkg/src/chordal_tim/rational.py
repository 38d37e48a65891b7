"""Exact rational parsing/formatting for the JSON wire formats."""

import re
from fractions import Fraction

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(x) -> str:
    """'p/q' in lowest terms with q > 0, or 'p' when q == 1."""
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    """Parse 'p/q' or 'p'.  Floats and decimal strings are rejected."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"rationals must be given as 'p/q' strings, got {text!r}")
    m = _RATIONAL.match(text)
    if m is None:
        raise ValueError(f"not an exact rational string: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)
