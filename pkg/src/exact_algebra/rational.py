"""
Exact rational scalars
Rational values are fractions.Fraction instances: always reduced, positive denominator
"""

import re
from fractions import Fraction
from typing import Union

from .errors import RationalParseError

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text: str) -> Fraction:
    """
    Parse the text form "p/q" (optional sign) or "p"

    Args:
        text: Rational string

    Returns:
        Reduced Fraction

    Raises:
        RationalParseError: If the text is not an integer or integer ratio,
            or the denominator is zero
    """
    match = _RATIONAL_PATTERN.match(str(text))
    if not match:
        raise RationalParseError(f"Invalid rational: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(f"Zero denominator in rational: {text!r}")

    return Fraction(numerator, denominator)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalParseError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalParseError(f"Unsupported rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Text form: "p" when the denominator is 1, else "p/q" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
