"""Real-valued functions: continuity on finite spaces, UC moduli, non-UC witnesses.

Functions come from a closed vocabulary so witness files stay data.  On a
finite space forward continuity at x reduces to f being constant on the
minimal neighbourhood of x, and continuity everywhere already implies
uniform continuity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .points import ZooPoint
from .rational import INF, ExtRational, as_fraction, fmt
from .sequences import (
    DEFAULT_EPS_GRID,
    DEFAULT_HORIZON,
    Modulus,
    Outcome,
    SequenceExpr,
    Verdict,
    Witness,
    _grid,
    check_parallel,
    evaluate,
)
from .space import FiniteSpace
from .topology import min_neighborhood

__all__ = [
    "FunctionError",
    "TableFn",
    "Reciprocal",
    "ConstantFn",
    "IndexValue",
    "InverseOf",
    "RealFn",
    "apply",
    "continuity_at_finite",
    "UCModulus",
    "uc_modulus_finite",
    "NonUCWitness",
    "verify_nonuc_witness",
    "ScaleDelta",
    "ConstDelta",
    "verify_uc_modulus_sampled",
]


class FunctionError(ValueError):
    pass


@dataclass(frozen=True)
class TableFn:
    values: tuple  # ((label, Fraction), ...)

    @classmethod
    def of(cls, mapping: dict) -> "TableFn":
        return cls(tuple(sorted((str(k), as_fraction(v)) for k, v in mapping.items())))

    def __call__(self, p) -> Fraction:
        key = str(p)
        for k, v in self.values:
            if k == key:
                return v
        raise FunctionError(f"table function undefined at {key}")


@dataclass(frozen=True)
class Reciprocal:
    """x -> 1/x, with the value at 0 declared explicitly."""

    at_zero: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "at_zero", as_fraction(self.at_zero))

    def __call__(self, p) -> Fraction:
        v = getattr(p, "value", None)
        if v is None:
            raise FunctionError(f"reciprocal undefined at non-numeric point {p}")
        return self.at_zero if v == 0 else 1 / v


@dataclass(frozen=True)
class ConstantFn:
    c: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))

    def __call__(self, p) -> Fraction:
        return self.c


@dataclass(frozen=True)
class IndexValue:
    """Value ``c / k**power`` chosen by the point's tag, k its index.

    ``IndexValue.of(recip=(1, 1), nat=(1, 2))`` sends 1/k to 1/k and k to 1/k^2.
    A rule for the ``zero`` tag uses power 0.
    """

    rules: tuple  # ((tag, c, power), ...)

    @classmethod
    def of(cls, **rules) -> "IndexValue":
        return cls(tuple(sorted((tag, as_fraction(c), int(pw)) for tag, (c, pw) in rules.items())))

    def __call__(self, p) -> Fraction:
        if not isinstance(p, ZooPoint):
            raise FunctionError(f"index rules need tagged points, got {p!r}")
        for tag, c, pw in self.rules:
            if tag == p.tag:
                if p.index is None:
                    return c
                return c / Fraction(p.index) ** pw
        raise FunctionError(f"no index rule for tag {p.tag!r}")


@dataclass(frozen=True)
class InverseOf:
    fn: "RealFn"

    def __call__(self, p) -> Fraction:
        v = self.fn(p)
        if v == 0:
            raise FunctionError(f"1/f undefined: f({p}) = 0")
        return 1 / v


RealFn = Union[TableFn, Reciprocal, ConstantFn, IndexValue, InverseOf]


def apply(f: RealFn, p) -> Fraction:
    return f(p)


def describe_fn(f: RealFn) -> str:
    if isinstance(f, TableFn):
        return "table{" + ", ".join(f"{k}:{fmt(v)}" for k, v in f.values) + "}"
    if isinstance(f, Reciprocal):
        return f"1/x (0 -> {fmt(f.at_zero)})"
    if isinstance(f, ConstantFn):
        return f"const {fmt(f.c)}"
    if isinstance(f, IndexValue):
        return "index{" + ", ".join(f"{t}: {fmt(c)}/k^{pw}" for t, c, pw in f.rules) + "}"
    if isinstance(f, InverseOf):
        return f"1/({describe_fn(f.fn)})"
    return repr(f)


# -- finite spaces ---------------------------------------------------------------


def continuity_at_finite(S: FiniteSpace, f: RealFn, x: str) -> tuple[bool, Optional[str]]:
    """Forward continuity at x: f constant on the minimal neighbourhood of x."""
    fx = f(x)
    for y in sorted(min_neighborhood(S, x), key=S.index):
        if f(y) != fx:
            return False, y
    return True, None


@dataclass(frozen=True)
class UCModulus:
    """Result of :func:`uc_modulus_finite`.

    When ``ok``, ``delta(eps)`` is the largest radius that works for eps.
    Otherwise ``witness`` is ``(x, y, d(x,y), |f(x)-f(y)|)`` with d = 0.
    """

    ok: bool
    pairs: tuple  # ((d(x,y), gap), ...) over x != y
    witness: Optional[tuple] = None

    def delta(self, eps) -> ExtRational:
        if not self.ok:
            raise FunctionError("function is not continuous; no modulus")
        eps = as_fraction(eps)
        if eps <= 0:
            raise ValueError("eps must be positive")
        return min((d for d, g in self.pairs if g >= eps), default=INF)

    __call__ = delta


def uc_modulus_finite(S: FiniteSpace, f: RealFn) -> UCModulus:
    values = {p: f(p) for p in S.points}
    for x in S.points:
        ok, y = continuity_at_finite(S, f, x)
        if not ok:
            return UCModulus(False, (), (x, y, S.d(x, y), abs(values[x] - values[y])))
    pairs = tuple(
        (S.table[i][j], abs(values[x] - values[y]))
        for i, x in enumerate(S.points)
        for j, y in enumerate(S.points)
        if i != j
    )
    return UCModulus(True, pairs)


# -- witnesses on zoo spaces -----------------------------------------------------


@dataclass(frozen=True)
class NonUCWitness:
    """Forward parallel sequences whose images stay at least ``eps`` apart from ``n0`` on."""

    space: object
    f: RealFn
    seq_x: SequenceExpr
    seq_y: SequenceExpr
    eps: Fraction
    modulus: Optional[Modulus] = None
    n0: int = 1

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.n0 < 1:
            raise ValueError("n0 must be >= 1")


def verify_nonuc_witness(
    w: NonUCWitness,
    horizon: int = DEFAULT_HORIZON,
    eps: Union[int, Iterable] = DEFAULT_EPS_GRID,
) -> Verdict:
    S = w.space
    for n in range(w.n0, horizon + 1):
        p, q = S.canonical(evaluate(w.seq_x, n)), S.canonical(evaluate(w.seq_y, n))
        gap = abs(w.f(p) - w.f(q))
        if gap < w.eps:
            return Verdict(
                Outcome.FAILS, horizon, "exact", f"gap >= {fmt(w.eps)} from n={w.n0}",
                Witness((n,), (str(p), str(q)), gap, w.eps, "gap<eps"),
            )
    par = check_parallel(S, w.seq_x, w.seq_y, "forward", horizon=horizon, modulus=w.modulus, eps=eps)
    if not par.holds:
        return par
    return Verdict(
        Outcome.HOLDS, horizon, par.basis,
        f"parallel ({par.certificate}); gap >= {fmt(w.eps)} for {w.n0} <= n <= {horizon}",
    )


@dataclass(frozen=True)
class ScaleDelta:
    """delta(eps) = c * eps**power."""

    c: Fraction = Fraction(1)
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        if self.c <= 0:
            raise ValueError("c must be positive")

    def __call__(self, eps) -> Fraction:
        return self.c * as_fraction(eps) ** self.power

    def __str__(self) -> str:
        return f"delta = {fmt(self.c)}*eps^{self.power}"


@dataclass(frozen=True)
class ConstDelta:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        if self.c <= 0:
            raise ValueError("c must be positive")

    def __call__(self, eps) -> Fraction:
        return self.c

    def __str__(self) -> str:
        return f"delta = {fmt(self.c)}"


def verify_uc_modulus_sampled(
    space,
    f: RealFn,
    rule: Callable,
    *,
    points: Optional[Iterable] = None,
    pairs: Optional[Iterable[tuple]] = None,
    horizon: int = 200,
    eps: Union[int, Iterable] = DEFAULT_EPS_GRID,
) -> Verdict:
    """Look for x, y with d(x,y) < delta(eps) but |f(x) - f(y)| >= eps.

    Pairs default to all ordered pairs over the first ``horizon`` points of
    ``points`` (or of the space's enumeration).  A clean run is reported
    as HOLDS up to the sample, never as a proof.
    """
    if pairs is None:
        src = space.points if points is None and isinstance(space, FiniteSpace) else (
            space.enumerate() if points is None else points
        )
        pts = [space.canonical(p) for p in itertools.islice(src, horizon)]
        pairs = [(x, y) for x in pts for y in pts if x != y]
    else:
        pairs = [(space.canonical(x), space.canonical(y)) for x, y in pairs]
    grid = _grid(eps)
    data = [(x, y, space.distance(x, y), abs(f(x) - f(y))) for x, y in pairs]
    for e in grid:
        delta = rule(e)
        if not delta > 0:
            raise ValueError(f"delta({fmt(e)}) is not positive")
        for x, y, d, gap in data:
            if d < delta and gap >= e:
                return Verdict(
                    Outcome.FAILS, horizon, "exact", str(rule),
                    Witness((), (str(x), str(y)), gap, e, "gap>=eps"),
                    note=f"d = {fmt(d)} < delta = {fmt(delta)}",
                )
    return Verdict(Outcome.HOLDS, horizon, "horizon", str(rule), note=f"{len(data)} pairs sampled")
