"""Exact rational helpers and the extended value ``INF``.

Distances are always :class:`fractions.Fraction`.  Derived quantities
(gaps, Lebesgue numbers, moduli) may additionally be ``INF``, which
compares greater than every Fraction.  ``INF`` is never used in
arithmetic, only in comparisons and ``min``/``max``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import NamedTuple, Union

INF = math.inf

ExtRational = Union[Fraction, float]

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*([1-9]\d*))?\s*$")


def parse_rational(text: str, *, nonnegative: bool = False) -> Fraction:
    """Parse ``INT`` or ``INT/POSINT`` into a canonical Fraction."""
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    m = _RATIONAL.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    q = Fraction(int(num), int(den) if den else 1)
    if nonnegative and q < 0:
        raise ValueError(f"negative value not allowed: {text!r}")
    return q


def parse_ext(text: str) -> ExtRational:
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity"):
        return INF
    return parse_rational(text)


def as_fraction(x) -> Fraction:
    """Coerce int / Fraction / rational string; floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def fmt(q: ExtRational) -> str:
    if q == INF:
        return "inf"
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_inf(q) -> bool:
    return isinstance(q, float) and q == INF


class Bound(NamedTuple):
    """A value with an exactness flag; inexact values are one-sided horizon bounds."""

    value: ExtRational
    exact: bool

    def __str__(self) -> str:
        return fmt(self.value) if self.exact else f"{fmt(self.value)} (horizon bound)"
