"""Isolation functional, point/set distances and the uniform-discreteness gap.

Every function returns a :class:`~quasiuc.rational.Bound`.  On finite
spaces and finite sets the value is exact.  Over infinite zoo sets the
infimum is taken over an enumerated prefix and flagged as an upper bound,
unless the space supplies a closed form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .rational import INF, Bound
from .sequences import FAMILIES, family_point
from .space import FiniteSpace

__all__ = [
    "Explicit",
    "Family",
    "SetUnion",
    "PointSetSpec",
    "SetSpecError",
    "parse_set",
    "enumerate_set",
    "contains",
    "isolation",
    "set_distance",
    "discreteness_gap",
]


class SetSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Explicit:
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise SetSpecError("empty point set")


@dataclass(frozen=True)
class Family:
    """Members ``family(k)`` for ``start <= k <= stop``, optionally only even or odd k."""

    name: str
    start: int = 1
    stop: Optional[int] = None
    parity: Optional[str] = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise SetSpecError(f"unknown family {self.name!r}")
        if self.parity not in (None, "even", "odd"):
            raise SetSpecError("parity must be 'even' or 'odd'")
        if self.start < 1:
            raise SetSpecError("family indices start at 1")
        if self.stop is not None and next(iter(self._indices()), None) is None:
            raise SetSpecError(f"{self} selects no index")

    def _indices(self) -> Iterator[int]:
        k = self.start
        if self.parity == "even" and k % 2:
            k += 1
        elif self.parity == "odd" and k % 2 == 0:
            k += 1
        step = 1 if self.parity is None else 2
        while self.stop is None or k <= self.stop:
            yield k
            k += step

    def __str__(self) -> str:
        base = self.name if self.parity is None else f"{self.parity}s-of({self.name})"
        if self.start == 1 and self.stop is None:
            return base
        return f"{base}[{self.start}..{'' if self.stop is None else self.stop}]"


@dataclass(frozen=True)
class SetUnion:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise SetSpecError("empty union")


PointSetSpec = Union[Explicit, Family, SetUnion]

_FAMILY_RE = re.compile(
    r"^(?:(evens|odds)-of\(\s*([\w-]+)\s*\)|([\w-]+))\s*(?:\[\s*(\d+)\s*\.\.\s*(\d*)\s*\])?$"
)


def parse_set(text: str) -> PointSetSpec:
    """Parse ``{a,b}``, ``reciprocals[2..]``, ``evens-of(reciprocals)`` or ``A | B``."""
    parts = [p.strip() for p in text.split("|")]
    if len(parts) > 1:
        return SetUnion(tuple(parse_set(p) for p in parts))
    t = parts[0]
    if t.startswith("{") and t.endswith("}"):
        items = [s.strip() for s in t[1:-1].split(",") if s.strip()]
        return Explicit(tuple(items))
    m = _FAMILY_RE.match(t)
    if not m:
        raise SetSpecError(f"cannot parse point set {text!r}")
    par, inner, bare, lo, hi = m.groups()
    name = inner or bare
    parity = None if par is None else par[:-1]
    return Family(name, int(lo) if lo else 1, int(hi) if hi else None, parity)


def enumerate_set(space, spec: PointSetSpec) -> Iterator:
    """Canonical members in a fixed order; unions are interleaved round-robin."""
    if isinstance(spec, Explicit):
        seen = set()
        for p in spec.points:
            c = space.parse_point(p) if isinstance(p, str) else space.canonical(p)
            if c not in seen:
                seen.add(c)
                yield c
        return
    if isinstance(spec, Family):
        if isinstance(space, FiniteSpace):
            raise SetSpecError("family sets need a zoo space")
        for k in spec._indices():
            yield space.canonical(family_point(spec.name, k))
        return
    seen = set()
    iters = [enumerate_set(space, p) for p in spec.parts]
    for group in itertools.zip_longest(*iters, fillvalue=None):
        for p in group:
            if p is not None and p not in seen:
                seen.add(p)
                yield p


def is_finite_spec(spec: PointSetSpec) -> bool:
    if isinstance(spec, Explicit):
        return True
    if isinstance(spec, Family):
        return spec.stop is not None
    return all(is_finite_spec(p) for p in spec.parts)


def contains(space, spec: PointSetSpec, x) -> bool:
    x = space.canonical(x)
    if isinstance(spec, SetUnion):
        return any(contains(space, p, x) for p in spec.parts)
    if isinstance(spec, Explicit):
        return x in set(enumerate_set(space, spec))
    k = _family_index(spec.name, x)
    if k is None or k < spec.start or (spec.stop is not None and k > spec.stop):
        return False
    if spec.parity == "even" and k % 2 or spec.parity == "odd" and k % 2 == 0:
        return False
    return space.canonical(family_point(spec.name, k)) == x


def _family_index(name: str, x) -> Optional[int]:
    v = getattr(x, "value", None)
    if name in ("a-seq", "b-seq"):
        return x.index if getattr(x, "tag", None) == name[0] else None
    if v is None:
        return None
    if name == "naturals":
        return int(v) if v > 0 and v.denominator == 1 else None
    if name == "reciprocals":
        return v.denominator if v > 0 and v.numerator == 1 else None
    if name == "negated-reciprocals":
        return v.denominator if v < 0 and v.numerator == -1 else None
    return None


def _take(space, spec, horizon: Optional[int]) -> tuple[list, bool]:
    """First ``horizon`` members and whether the set was exhausted."""
    if horizon is None:
        if not is_finite_spec(spec) and not isinstance(space, FiniteSpace):
            raise SetSpecError("an infinite set needs a horizon")
        pts = list(enumerate_set(space, spec))
        return pts, True
    pts = list(itertools.islice(enumerate_set(space, spec), horizon + 1))
    exhausted = len(pts) <= horizon
    return pts[:horizon], exhausted


def isolation(space, x, horizon: Optional[int] = None) -> Bound:
    """I+(x) = inf over y != x of d(x, y).

    Finite spaces: the exact minimum.  Zoo spaces: the shipped closed form
    when ``horizon`` is None, otherwise the minimum over the first
    ``horizon`` enumerated carrier points (an upper bound).
    """
    x = space.canonical(x)
    if isinstance(space, FiniteSpace):
        if len(space) < 2:
            raise ValueError("isolation is undefined on a one-point space")
        i = space.index(x)
        return Bound(min(v for j, v in enumerate(space.table[i]) if j != i), True)
    if horizon is None:
        return Bound(space.isolation(x).value, True)
    best = INF
    for y in itertools.islice(space.enumerate(), horizon):
        if y != x:
            best = min(best, space.distance(x, y))
    if best == INF:
        raise ValueError("no other carrier point within the horizon")
    return Bound(best, False)


def set_distance(space, frm, to: PointSetSpec, horizon: Optional[int] = None) -> Bound:
    """d(A, B) = inf d(a, b); ``frm`` is a single point or a set spec.

    With a horizon each infinite set contributes its first ``horizon``
    members, so a pair of infinite sets costs ``horizon**2`` evaluations.
    """
    if isinstance(frm, (Explicit, Family, SetUnion)):
        A, ex_a = _take(space, frm, horizon)
    else:
        A, ex_a = [space.canonical(frm)], True
    B, ex_b = _take(space, to, horizon)
    if not A or not B:
        raise SetSpecError("empty set")
    d = space.distance
    best = min(d(a, b) for a in A for b in B)
    return Bound(best, ex_a and ex_b)


def discreteness_gap(space, A: PointSetSpec | Iterable, horizon: Optional[int] = None, both_orders: bool = True) -> Bound:
    """inf of d(x, y) over distinct x, y in A; INF for a singleton.

    ``both_orders=False`` reads each unordered pair as separated when
    either orientation is, i.e. uses max(d(x,y), d(y,x)).
    """
    if not isinstance(A, (Explicit, Family, SetUnion)):
        A = Explicit(tuple(A))
    pts, exact = _take(space, A, horizon)
    d = space.distance
    best = INF
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            u, v = d(x, y), d(y, x)
            best = min(best, min(u, v) if both_orders else max(u, v))
    return Bound(best, exact)
