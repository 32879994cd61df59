"""Exact rational scalars and their canonical text form.

All coefficient arithmetic in this package runs on ``fractions.Fraction``,
which already guarantees the invariants we need: reduced form, positive
denominator, exact arithmetic, and a loud ``ZeroDivisionError`` on division
by zero.  This module adds the strict text format used by the CLI and the
JSON serializations: optional sign, integer, optional "/" positive integer
(e.g. "-3/7", "2").  Anything else -- decimals, exponents, whitespace -- is
rejected.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import RationalFormatError

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal, rejecting anything outside the strict grammar."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalFormatError(f"not a rational literal: {text!r}")
    if m.group(1) is not None and int(m.group(1)) == 0:
        raise RationalFormatError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Canonical text form: "n" or "n/d" with d > 0 and gcd(n, d) = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None when it is not a rational square."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def falling_factorial(mu: Fraction, j: int) -> Fraction:
    """mu (mu-1) ... (mu-j+1); equals 1 for j = 0."""
    out = Fraction(1)
    for i in range(j):
        out *= mu - i
    return out
