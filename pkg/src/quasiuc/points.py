"""Tagged points for the countable example spaces.

Numeric points have one canonical tag per value: ``0`` is Zero, a
positive integer ``k`` is Nat(k), ``1/k`` with ``k >= 2`` is Recip(k) and
anything else is Rat(q).  ``a<k>`` / ``b<k>`` are abstract points with no
numeric value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .rational import as_fraction, fmt, parse_rational

ZERO, NAT, RECIP, RAT, ASEQ, BSEQ = "zero", "nat", "recip", "rat", "a", "b"
TAGS = (ZERO, NAT, RECIP, RAT, ASEQ, BSEQ)


@dataclass(frozen=True, order=True)
class ZooPoint:
    tag: str
    arg: Optional[Fraction] = None
    # numeric value, or None for the abstract a/b points
    value: Optional[Fraction] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.tag == ZERO:
            v = Fraction(0)
        elif self.tag == RECIP:
            v = 1 / self.arg
        elif self.tag in (NAT, RAT):
            v = self.arg
        else:
            v = None
        object.__setattr__(self, "value", v)

    @property
    def index(self) -> Optional[int]:
        if self.tag in (NAT, RECIP, ASEQ, BSEQ):
            return int(self.arg)
        return None

    @property
    def is_numeric(self) -> bool:
        return self.tag not in (ASEQ, BSEQ)

    def __str__(self) -> str:
        if self.tag in (ASEQ, BSEQ):
            return f"{self.tag}{int(self.arg)}"
        return fmt(self.value)

    def __repr__(self) -> str:
        return f"ZooPoint({self})"


def from_value(q) -> ZooPoint:
    q = as_fraction(q)
    if q == 0:
        return ZooPoint(ZERO)
    if q > 0 and q.denominator == 1:
        return ZooPoint(NAT, q)
    if q > 0 and q.numerator == 1:
        return ZooPoint(RECIP, Fraction(q.denominator))
    return ZooPoint(RAT, q)


def zero() -> ZooPoint:
    return ZooPoint(ZERO)


def nat(k: int) -> ZooPoint:
    if k < 1:
        raise ValueError("naturals start at 1")
    return ZooPoint(NAT, Fraction(k))


def recip(k: int) -> ZooPoint:
    if k < 1:
        raise ValueError("reciprocal index must be >= 1")
    return from_value(Fraction(1, k))


def aseq(k: int) -> ZooPoint:
    if k < 1:
        raise ValueError("index must be >= 1")
    return ZooPoint(ASEQ, Fraction(k))


def bseq(k: int) -> ZooPoint:
    if k < 1:
        raise ValueError("index must be >= 1")
    return ZooPoint(BSEQ, Fraction(k))


_AB = re.compile(r"^\s*([ab])\s*(\d+)\s*$")


def parse_point(text) -> ZooPoint:
    """Parse ``"3"``, ``"1/2"``, ``"-1/3"``, ``"a4"`` or ``"b1"``."""
    if isinstance(text, ZooPoint):
        return text
    if isinstance(text, (int, Fraction)):
        return from_value(text)
    m = _AB.match(text)
    if m:
        tag, k = m.groups()
        return aseq(int(k)) if tag == "a" else bseq(int(k))
    return from_value(parse_rational(text))


def is_reciprocal_value(q: Optional[Fraction]) -> bool:
    """q = 1/k for some integer k >= 1."""
    return q is not None and q > 0 and q.numerator == 1


def is_natural_value(q: Optional[Fraction]) -> bool:
    return q is not None and q > 0 and q.denominator == 1
