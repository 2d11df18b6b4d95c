"""Finitely described sequences and three-valued convergence checkers.

Sequences come from a closed vocabulary (:class:`Constant`,
:class:`Indexed`, :class:`FromList`, :class:`Interleave`) so they can be
serialised and replayed.  Checkers return a :class:`Verdict`:

* ``HOLDS`` -- exact (eventually periodic input), or a supplied modulus
  passed every check, or (``basis="horizon"``) the samples settle by H/2;
* ``FAILS`` -- a concrete witness: a supplied modulus is violated, the
  input is eventually periodic and provably fails, or a supplied
  :class:`LowerBound` certificate was confirmed on every sample;
* ``UNKNOWN`` -- everything else.  Sampling alone never refutes.

Indices are 1-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Union

from .points import ZooPoint, aseq, bseq, from_value
from .rational import Bound, as_fraction, fmt

__all__ = [
    "SequenceError",
    "FAMILIES",
    "Constant",
    "Indexed",
    "FromList",
    "Interleave",
    "SequenceExpr",
    "evaluate",
    "as_periodic",
    "Ceil",
    "Const",
    "MaxOf",
    "Modulus",
    "LowerBound",
    "Outcome",
    "Witness",
    "Verdict",
    "eps_grid",
    "sample_indices",
    "check_convergence",
    "check_cauchy",
    "check_parallel",
    "cluster_points_finite",
    "v_f",
    "tail_closures",
    "DEFAULT_HORIZON",
    "DEFAULT_EPS_GRID",
]

DEFAULT_HORIZON = 10_000
DEFAULT_EPS_GRID = 64
DENSE_SINGLE = 1024
DENSE_PAIR = 64
TAIL_RUN = 32


class SequenceError(ValueError):
    pass


# -- sequence vocabulary ------------------------------------------------------

FAMILIES = ("naturals", "reciprocals", "negated-reciprocals", "a-seq", "b-seq")


@dataclass(frozen=True)
class Constant:
    point: Any


@dataclass(frozen=True)
class Indexed:
    """``n -> family(scale*n + offset)``, optionally shifted by a rational.

    ``Indexed("reciprocals")`` is 1, 1/2, 1/3, ...;
    ``Indexed("naturals", shift=Fraction(1, 2))`` is 3/2, 5/2, ...
    """

    family: str
    offset: int = 0
    scale: int = 1
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SequenceError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.scale < 1:
            raise SequenceError("scale must be >= 1")
        object.__setattr__(self, "shift", as_fraction(self.shift))
        if self.shift and self.family in ("a-seq", "b-seq"):
            raise SequenceError("abstract families cannot be shifted")

    def index(self, n: int) -> int:
        return self.scale * n + self.offset


@dataclass(frozen=True)
class FromList:
    prefix: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise SequenceError("period must be nonempty")


@dataclass(frozen=True)
class Interleave:
    """first_1, second_1, first_2, second_2, ..."""

    first: "SequenceExpr"
    second: "SequenceExpr"


SequenceExpr = Union[Constant, Indexed, FromList, Interleave]


def family_point(family: str, k: int, shift: Fraction = Fraction(0)) -> ZooPoint:
    if k < 1:
        raise SequenceError(f"family index {k} is not positive")
    if family == "naturals":
        return from_value(Fraction(k) + shift)
    if family == "reciprocals":
        return from_value(Fraction(1, k) + shift)
    if family == "negated-reciprocals":
        return from_value(Fraction(-1, k) + shift)
    if family == "a-seq":
        return aseq(k)
    if family == "b-seq":
        return bseq(k)
    raise SequenceError(f"unknown family {family!r}")


def evaluate(seq: SequenceExpr, n: int):
    if n < 1:
        raise SequenceError("sequences are indexed from 1")
    if isinstance(seq, Constant):
        return seq.point
    if isinstance(seq, Indexed):
        return family_point(seq.family, seq.index(n), seq.shift)
    if isinstance(seq, FromList):
        if n <= len(seq.prefix):
            return seq.prefix[n - 1]
        return seq.period[(n - len(seq.prefix) - 1) % len(seq.period)]
    if isinstance(seq, Interleave):
        if n % 2:
            return evaluate(seq.first, (n + 1) // 2)
        return evaluate(seq.second, n // 2)
    raise TypeError(f"not a sequence expression: {seq!r}")


def as_periodic(seq: SequenceExpr) -> Optional[tuple[tuple, tuple]]:
    """``(prefix, period)`` if the sequence is eventually periodic, else None."""
    if isinstance(seq, Constant):
        return (), (seq.point,)
    if isinstance(seq, FromList):
        return seq.prefix, seq.period
    if isinstance(seq, Interleave):
        a, b = as_periodic(seq.first), as_periodic(seq.second)
        if a is None or b is None:
            return None
        m = max(len(a[0]), len(b[0]))
        p = math.lcm(len(a[1]), len(b[1]))
        sub_a = FromList(*a)
        sub_b = FromList(*b)
        prefix = tuple(evaluate(seq, n) for n in range(1, 2 * m + 1))
        period = tuple(
            evaluate(sub_a if r % 2 == 0 else sub_b, m + r // 2 + 1) for r in range(2 * p)
        )
        return prefix, period
    return None


def describe(seq: SequenceExpr) -> str:
    if isinstance(seq, Constant):
        return f"const({seq.point})"
    if isinstance(seq, Indexed):
        parts = [seq.family]
        if seq.scale != 1 or seq.offset:
            parts.append(f"at {seq.scale}n{seq.offset:+d}" if seq.offset else f"at {seq.scale}n")
        if seq.shift:
            parts.append(f"shift {fmt(seq.shift)}")
        return " ".join(parts)
    if isinstance(seq, FromList):
        pre = ",".join(map(str, seq.prefix))
        per = ",".join(map(str, seq.period))
        return f"[{pre}]({per})*"
    if isinstance(seq, Interleave):
        return f"interleave({describe(seq.first)}; {describe(seq.second)})"
    return repr(seq)


# -- moduli and certificates ---------------------------------------------------


@dataclass(frozen=True)
class Ceil:
    """``N(eps) = ceil(c / eps**power) + offset``."""

    c: Fraction = Fraction(1)
    power: int = 1
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c", as_fraction(self.c))
        if self.c <= 0 or self.power < 1:
            raise ValueError("Ceil needs c > 0 and power >= 1")

    def __call__(self, eps) -> int:
        eps = as_fraction(eps)
        return max(1, math.ceil(self.c / eps**self.power) + self.offset)

    def __str__(self) -> str:
        den = "eps" if self.power == 1 else f"eps^{self.power}"
        off = f"{self.offset:+d}" if self.offset else ""
        return f"ceil({fmt(self.c)}/{den}){off}"


@dataclass(frozen=True)
class Const:
    n: int

    def __call__(self, eps) -> int:
        return max(1, self.n)

    def __str__(self) -> str:
        return f"const({self.n})"


@dataclass(frozen=True)
class MaxOf:
    a: "Modulus"
    b: "Modulus"

    def __call__(self, eps) -> int:
        return max(self.a(eps), self.b(eps))

    def __str__(self) -> str:
        return f"max({self.a}, {self.b})"


Modulus = Union[Ceil, Const, MaxOf]


@dataclass(frozen=True)
class LowerBound:
    """Refutation certificate: the relevant distance stays >= eps from ``start`` on.

    For tail checks the distance at index n; for Cauchy checks the pair
    (k, k + gap); for the pseudo variants every pair j < k.
    """

    eps: Fraction
    start: int = 1
    gap: int = 1

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.eps <= 0:
            raise ValueError("lower bound must be positive")

    def __str__(self) -> str:
        return f"distance >= {fmt(self.eps)} from index {self.start}"


# -- verdicts -------------------------------------------------------------------


class Outcome(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Witness:
    """A concrete violation: ``value`` compared against ``eps`` at ``indices``.

    ``relation`` names the observed comparison: ``"distance>=eps"`` is a
    distance that should have dropped below eps, ``"gap<eps"`` a function
    gap that should have stayed at least eps, and ``"distance<eps"`` a
    sample contradicting a lower-bound certificate.
    """

    indices: tuple[int, ...]
    points: tuple[str, ...]
    value: Fraction
    eps: Fraction
    relation: str = "distance>=eps"

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "points": list(self.points),
            "value": fmt(self.value),
            "eps": fmt(self.eps),
            "relation": self.relation,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Witness":
        from .rational import parse_rational

        return cls(
            tuple(obj["indices"]),
            tuple(obj["points"]),
            parse_rational(obj["value"]),
            parse_rational(obj["eps"]),
            obj.get("relation", "distance>=eps"),
        )

    def __str__(self) -> str:
        idx = ",".join(map(str, self.indices))
        pts = ", ".join(self.points)
        op = ">=" if self.relation.endswith(">=eps") else "<"
        return f"n=({idx}) points ({pts}): {fmt(self.value)} {op} eps={fmt(self.eps)}"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    horizon: int
    basis: str = "horizon"  # exact | modulus | horizon | certificate
    certificate: Optional[str] = None
    witness: Optional[Witness] = None
    note: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def fails(self) -> bool:
        return self.outcome is Outcome.FAILS

    @property
    def unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "horizon": self.horizon,
            "basis": self.basis,
            "certificate": self.certificate,
            "witness": None if self.witness is None else self.witness.to_json(),
            "note": self.note,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Verdict":
        w = obj.get("witness")
        return cls(
            Outcome(obj["outcome"]),
            obj["horizon"],
            obj.get("basis", "horizon"),
            obj.get("certificate"),
            None if w is None else Witness.from_json(w),
            obj.get("note"),
        )

    def __str__(self) -> str:
        s = f"{self.outcome.value.upper()} [{self.basis}, H={self.horizon}]"
        if self.certificate:
            s += f" {self.certificate}"
        if self.witness is not None:
            s += f"; witness {self.witness}"
        if self.note:
            s += f" ({self.note})"
        return s


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Conjunction: the first FAILS wins, then the first UNKNOWN."""
    verdicts = list(verdicts)
    if not verdicts:
        raise ValueError("nothing to combine")
    for v in verdicts:
        if v.fails:
            return v
    for v in verdicts:
        if v.unknown:
            return v
    return verdicts[0]


# -- sampling -------------------------------------------------------------------


def eps_grid(k: int = DEFAULT_EPS_GRID) -> list[Fraction]:
    if k < 1:
        raise ValueError("eps grid needs at least one value")
    return [Fraction(1, j) for j in range(1, k + 1)]


def geometric_indices(horizon: int) -> list[int]:
    out, g = [], 1
    while g <= horizon:
        out.append(g)
        g = max(g + 1, math.ceil(g * 5 / 4))
    return out


def sample_indices(horizon: int, dense: int = DENSE_SINGLE, neighbours: bool = False) -> list[int]:
    """All n <= dense plus a geometric spread up to the horizon.

    Sample sets are nested: raising the horizon only adds indices.
    """
    s = set(range(1, min(horizon, dense) + 1))
    for g in geometric_indices(horizon):
        s.add(g)
        if neighbours:
            s.update(x for x in (g - 1, g + 1) if 1 <= x <= horizon)
    return sorted(s)


def _tail_indices(start: int, horizon: int) -> list[int]:
    s = set(range(start, min(start + TAIL_RUN - 1, horizon) + 1))
    s.update(g for g in geometric_indices(horizon) if g >= start)
    return sorted(s)


class _Seq:
    """Cached evaluation of a sequence against a space."""

    def __init__(self, space, seq: SequenceExpr):
        self.space = space
        self.seq = seq
        self._cache: dict[int, Any] = {}

    def __call__(self, n: int):
        p = self._cache.get(n)
        if p is None:
            p = self.space.canonical(evaluate(self.seq, n))
            self._cache[n] = p
        return p


def _pt(p) -> str:
    return str(p)


def _grid(eps: Union[int, Iterable]) -> list[Fraction]:
    if isinstance(eps, int):
        return eps_grid(eps)
    return [as_fraction(e) for e in eps]


def _tail_check(dist: Callable[[int], tuple[Fraction, tuple]], horizon: int, modulus, refute, grid) -> Verdict:
    """Shared engine for 'dist(n) -> 0' checks (convergence, parallel)."""
    if refute is not None:
        idx = [n for n in sample_indices(horizon) if n >= refute.start]
        if not idx:
            return Verdict(Outcome.UNKNOWN, horizon, "certificate", str(refute), note="certificate start beyond horizon")
        for n in idx:
            v, pts = dist(n)
            if v < refute.eps:
                return Verdict(
                    Outcome.UNKNOWN,
                    horizon,
                    "certificate",
                    str(refute),
                    Witness((n,), pts, v, refute.eps, "distance<eps"),
                    note="certificate contradicted",
                )
        v, pts = dist(idx[0])
        return Verdict(Outcome.FAILS, horizon, "certificate", str(refute), Witness((idx[0],), pts, v, refute.eps))

    if modulus is not None:
        short = False
        for eps in grid:
            N = modulus(eps)
            if N > horizon:
                short = True
                continue
            for n in _tail_indices(N, horizon):
                v, pts = dist(n)
                if v >= eps:
                    return Verdict(Outcome.FAILS, horizon, "modulus", f"N(eps) = {modulus}", Witness((n,), pts, v, eps))
        if short:
            return Verdict(Outcome.UNKNOWN, horizon, "modulus", f"N(eps) = {modulus}", note="modulus exceeds horizon")
        return Verdict(Outcome.HOLDS, horizon, "modulus", f"N(eps) = {modulus}")

    idx = sample_indices(horizon)
    values = [dist(n)[0] for n in idx]
    worst = 1
    for eps in grid:
        last = 0
        for n, v in zip(idx, values):
            if v >= eps:
                last = n
        if last + 1 > horizon // 2:
            return Verdict(Outcome.UNKNOWN, horizon, "horizon", note=f"not settled below eps={fmt(eps)} by H/2")
        worst = max(worst, last + 1)
    return Verdict(Outcome.HOLDS, horizon, "horizon", f"samples below every grid eps from n={worst}")


# -- checkers -------------------------------------------------------------------


def _periodic_tail(seq) -> Optional[tuple[int, tuple]]:
    per = as_periodic(seq)
    if per is None:
        return None
    prefix, period = per
    return len(prefix) + 1, period


def check_convergence(
    space,
    seq: SequenceExpr,
    x,
    direction: str = "forward",
    *,
    horizon: int = DEFAULT_HORIZON,
    modulus: Optional[Modulus] = None,
    refute: Optional[LowerBound] = None,
    eps: Union[int, Iterable] = DEFAULT_EPS_GRID,
) -> Verdict:
    """Forward: d(x, s_n) -> 0.  Backward: d(s_n, x) -> 0."""
    if direction not in ("forward", "backward"):
        raise ValueError(f"bad direction {direction!r}")
    x = space.canonical(x)
    s = _Seq(space, seq)

    def dist(n):
        p = s(n)
        if direction == "forward":
            return space.distance(x, p), (_pt(x), _pt(p))
        return space.distance(p, x), (_pt(p), _pt(x))

    tail = _periodic_tail(seq)
    if tail is not None:
        n0, period = tail
        for r in range(len(period)):
            v, pts = dist(n0 + r)
            if v > 0:
                return Verdict(Outcome.FAILS, horizon, "exact", "eventually periodic", Witness((n0 + r,), pts, v, v))
        return Verdict(Outcome.HOLDS, horizon, "exact", "eventually periodic")
    return _tail_check(dist, horizon, modulus, refute, _grid(eps))


def check_parallel(
    space,
    seq_a: SequenceExpr,
    seq_b: SequenceExpr,
    direction: str = "forward",
    *,
    horizon: int = DEFAULT_HORIZON,
    modulus: Optional[Modulus] = None,
    refute: Optional[LowerBound] = None,
    eps: Union[int, Iterable] = DEFAULT_EPS_GRID,
) -> Verdict:
    """Forward: d(a_n, b_n) -> 0.  Backward: d(b_n, a_n) -> 0."""
    if direction not in ("forward", "backward"):
        raise ValueError(f"bad direction {direction!r}")
    a, b = _Seq(space, seq_a), _Seq(space, seq_b)

    def dist(n):
        p, q = a(n), b(n)
        if direction == "forward":
            return space.distance(p, q), (_pt(p), _pt(q))
        return space.distance(q, p), (_pt(q), _pt(p))

    ta, tb = _periodic_tail(seq_a), _periodic_tail(seq_b)
    if ta is not None and tb is not None:
        n0 = max(ta[0], tb[0])
        for r in range(math.lcm(len(ta[1]), len(tb[1]))):
            v, pts = dist(n0 + r)
            if v > 0:
                return Verdict(Outcome.FAILS, horizon, "exact", "eventually periodic", Witness((n0 + r,), pts, v, v))
        return Verdict(Outcome.HOLDS, horizon, "exact", "eventually periodic")
    return _tail_check(dist, horizon, modulus, refute, _grid(eps))


CAUCHY_VARIANTS = ("leftK", "rightK", "pseudo-leftK", "pseudo-rightK")


def check_cauchy(
    space,
    seq: SequenceExpr,
    variant: str = "leftK",
    *,
    horizon: int = DEFAULT_HORIZON,
    modulus: Optional[Modulus] = None,
    refute: Optional[LowerBound] = None,
    eps: Union[int, Iterable] = DEFAULT_EPS_GRID,
) -> Verdict:
    """Left K-Cauchy: d(s_k, s_n) < eps for N <= k <= n; right swaps the arguments.

    The pseudo variants ask, for every eps and n, for some pair
    n < j < k with d(s_j, s_k) < eps.  They can only be refuted with a
    :class:`LowerBound` certificate.
    """
    if variant not in CAUCHY_VARIANTS:
        raise ValueError(f"variant must be one of {CAUCHY_VARIANTS}")
    s = _Seq(space, seq)
    left = variant in ("leftK", "pseudo-leftK")
    pseudo = variant.startswith("pseudo")
    if pseudo and modulus is not None:
        raise ValueError("the pseudo variants take no modulus")
    grid = _grid(eps)
    cache: dict[tuple[int, int], Fraction] = {}

    def pair(k, n):
        """Distance for the ordered pair k < n (or k == n)."""
        v = cache.get((k, n))
        if v is None:
            p, q = s(k), s(n)
            v = space.distance(p, q) if left else space.distance(q, p)
            cache[(k, n)] = v
        return v

    def pts(k, n):
        return (_pt(s(k)), _pt(s(n))) if left else (_pt(s(n)), _pt(s(k)))

    tail = _periodic_tail(seq)
    if tail is not None:
        n0, period = tail
        if pseudo:
            return Verdict(Outcome.HOLDS, horizon, "exact", "eventually periodic: values recur")
        L = len(period)
        for i in range(L):
            for j in range(L):
                k, n = n0 + i, n0 + (j if j >= i else j + L)
                v = pair(k, n)
                if v > 0:
                    return Verdict(Outcome.FAILS, horizon, "exact", "eventually periodic", Witness((k, n), pts(k, n), v, v))
        return Verdict(Outcome.HOLDS, horizon, "exact", "eventually periodic")

    if refute is not None:
        idx = [i for i in sample_indices(horizon, DENSE_PAIR, neighbours=True) if i >= refute.start]
        if pseudo:
            pairs = [(j, k) for a, j in enumerate(idx) for k in idx[a + 1:]]
        else:
            pairs = [(k, k + refute.gap) for k in idx if k + refute.gap <= horizon]
        if not pairs:
            return Verdict(Outcome.UNKNOWN, horizon, "certificate", str(refute), note="certificate start beyond horizon")
        for k, n in pairs:
            v = pair(k, n)
            if v < refute.eps:
                return Verdict(
                    Outcome.UNKNOWN, horizon, "certificate", str(refute),
                    Witness((k, n), pts(k, n), v, refute.eps, "distance<eps"),
                    note="certificate contradicted",
                )
        k, n = pairs[0]
        return Verdict(Outcome.FAILS, horizon, "certificate", str(refute), Witness((k, n), pts(k, n), pair(k, n), refute.eps))

    if pseudo:
        idx = sample_indices(horizon, DENSE_PAIR, neighbours=True)
        good: dict[int, Fraction] = {}  # j -> smallest sampled d(s_j, s_k), k > j
        for a, j in enumerate(idx):
            later = idx[a + 1:]
            if later:
                good[j] = min(pair(j, k) for k in later)
        for e in grid:
            J = max((j for j, v in good.items() if v < e), default=0)
            if J <= horizon // 2:
                return Verdict(Outcome.UNKNOWN, horizon, "horizon", note=f"no close pair beyond H/2 at eps={fmt(e)}")
        return Verdict(Outcome.HOLDS, horizon, "horizon", "close pairs found beyond H/2 for every grid eps")

    if modulus is not None:
        short = False
        for e in grid:
            N = modulus(e)
            if N > horizon:
                short = True
                continue
            idx = _tail_indices(N, horizon)
            idx = sorted(set(idx) | {i + 1 for i in idx if i + 1 <= horizon})
            for a, k in enumerate(idx):
                for n in idx[a:]:
                    v = pair(k, n)
                    if v >= e:
                        return Verdict(Outcome.FAILS, horizon, "modulus", f"N(eps) = {modulus}", Witness((k, n), pts(k, n), v, e))
        if short:
            return Verdict(Outcome.UNKNOWN, horizon, "modulus", f"N(eps) = {modulus}", note="modulus exceeds horizon")
        return Verdict(Outcome.HOLDS, horizon, "modulus", f"N(eps) = {modulus}")

    idx = sample_indices(horizon, DENSE_PAIR, neighbours=True)
    worst = 1
    for e in grid:
        last = 0
        for a, k in enumerate(idx):
            if k <= last:
                continue
            if any(pair(k, n) >= e for n in idx[a + 1:]):
                last = k
        if last + 1 > horizon // 2:
            return Verdict(Outcome.UNKNOWN, horizon, "horizon", note=f"not settled below eps={fmt(e)} by H/2")
        worst = max(worst, last + 1)
    return Verdict(Outcome.HOLDS, horizon, "horizon", f"sampled pairs below every grid eps from n={worst}")


def cluster_points_finite(S, seq: SequenceExpr) -> frozenset:
    """Cluster points of an eventually periodic sequence.

    A subsequence can only converge to x through values recurring in the
    period, and with finitely many distances that means some period value
    p has d(x, p) = 0.
    """
    per = as_periodic(seq)
    if per is None:
        raise SequenceError("cluster points are computed for eventually periodic sequences only")
    period = [S.canonical(p) for p in per[1]]
    return frozenset(x for x in S.points if any(S.distance(x, p) == 0 for p in period))


def v_f(space, seq: SequenceExpr, horizon: int = DEFAULT_HORIZON) -> Bound:
    """sup over n of d(s_{2n-1}, s_{2n}).

    Exact for eventually periodic sequences; otherwise the sup over
    n <= horizon, a lower bound for the true value.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    s = _Seq(space, seq)
    per = as_periodic(seq)
    if per is not None:
        count = len(per[0]) // 2 + len(per[1]) + 1
        return Bound(max(space.distance(s(2 * n - 1), s(2 * n)) for n in range(1, count + 1)), True)
    return Bound(max(space.distance(s(2 * n - 1), s(2 * n)) for n in range(1, horizon + 1)), False)


def tail_closures(S, seq: SequenceExpr, count: int) -> tuple[list[frozenset], frozenset]:
    """Closures A_n of the tails {z_k : k >= 2n-1} for n <= count, and their intersection."""
    from .topology import closure

    per = as_periodic(seq)
    if per is None:
        raise SequenceError("tail closures are computed for eventually periodic sequences only")
    prefix, period = per
    chain = []
    for n in range(1, count + 1):
        start = 2 * n - 1
        tail = [p for i, p in enumerate(prefix, 1) if i >= start] + list(period)
        chain.append(closure(S, [S.canonical(p) for p in tail]))
    inter = frozenset.intersection(*chain) if chain else frozenset(S.points)
    return chain, inter
