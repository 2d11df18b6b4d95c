"""Catalog of countable example spaces with executable claims.

Each space is a closed-form distance rule over tagged points
(:mod:`quasiuc.points`), written as an ordered list of named cases so
that individual cases can be mutated for sensitivity testing.  Claims
bundle a sequence/functional check with the outcome it must produce.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .points import (
    ASEQ,
    BSEQ,
    NAT,
    RECIP,
    ZERO,
    ZooPoint,
    aseq,
    bseq,
    from_value,
    is_natural_value,
    is_reciprocal_value,
    nat,
    parse_point,
    recip,
    zero,
)
from .rational import as_fraction, fmt
from .realfunctions import IndexValue, InverseOf, NonUCWitness, Reciprocal, ScaleDelta, verify_nonuc_witness, verify_uc_modulus_sampled
from .sequences import (
    DEFAULT_EPS_GRID,
    DEFAULT_HORIZON,
    Ceil,
    Const,
    Constant,
    Indexed,
    LowerBound,
    Outcome,
    Verdict,
    Witness,
    check_cauchy,
    check_convergence,
    check_parallel,
    combine,
)
from .space import FiniteSpace, conjugate, is_T1

__all__ = [
    "CarrierError",
    "Case",
    "IsoForm",
    "CountableSpace",
    "Claim",
    "Mutation",
    "MUTATIONS",
    "build_catalog",
    "zoo_get",
    "zoo_ids",
    "restrict",
    "truncation",
]


class CarrierError(ValueError):
    pass


@dataclass(frozen=True)
class Case:
    name: str
    applies: Callable[[ZooPoint, ZooPoint], bool]
    value: Callable[[ZooPoint, ZooPoint], Fraction]


@dataclass(frozen=True)
class IsoForm:
    """Closed form of I+(x).

    ``witness`` attains the infimum; otherwise ``approach(k)`` is a point
    other than x with d(x, approach(k)) <= value + 1/k.
    """

    value: Fraction
    witness: Optional[ZooPoint] = None
    approach: Optional[Callable[[int], ZooPoint]] = None

    @property
    def attained(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True, eq=False)
class CountableSpace:
    id: str
    title: str
    carrier_text: str
    carrier: Callable[[ZooPoint], bool]
    cases: tuple
    isolation_rule: Callable[[ZooPoint], IsoForm]
    enumerator: Callable[[], Iterator[ZooPoint]]
    metadata: tuple = ()
    claims: tuple = ()

    def canonical(self, p) -> ZooPoint:
        p = parse_point(p)
        if not self.carrier(p):
            raise CarrierError(f"{p} is not in the carrier of {self.id} ({self.carrier_text})")
        return p

    parse_point = canonical

    def case_of(self, x: ZooPoint, y: ZooPoint) -> Optional[str]:
        if x == y:
            return None
        for c in self.cases:
            if c.applies(x, y):
                return c.name
        raise AssertionError(f"no distance case for ({x}, {y}) in {self.id}")

    def distance(self, x: ZooPoint, y: ZooPoint) -> Fraction:
        if x == y:
            return Fraction(0)
        for c in self.cases:
            if c.applies(x, y):
                return c.value(x, y)
        raise AssertionError(f"no distance case for ({x}, {y}) in {self.id}")

    d = distance

    def isolation(self, x) -> IsoForm:
        return self.isolation_rule(self.canonical(x))

    def enumerate(self) -> Iterator[ZooPoint]:
        return self.enumerator()

    def prefix(self, k: int) -> list[ZooPoint]:
        return list(itertools.islice(self.enumerator(), k))

    def sample(self, rng: random.Random, size: int, pool: int = 300) -> list[ZooPoint]:
        return rng.sample(self.prefix(pool), size)

    def claim(self, cid: str) -> "Claim":
        for c in self.claims:
            if c.id == cid:
                return c
        raise KeyError(cid)


def restrict(Z: CountableSpace, points: Iterable, name: str = "") -> FiniteSpace:
    pts = [Z.canonical(p) for p in points]
    if not pts:
        raise ValueError("empty truncation")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in truncation")
    rows = [[Z.distance(x, y) for y in pts] for x in pts]
    return FiniteSpace(tuple(str(p) for p in pts), rows, name or f"{Z.id}-{len(pts)}")


def truncation(Z: CountableSpace, size: int) -> FiniteSpace:
    """The first ``size`` enumerated carrier points."""
    return restrict(Z, Z.prefix(size))


# -- enumerations -------------------------------------------------------------------


def _rationals() -> Iterator[ZooPoint]:
    """0, then every rational p/q in lowest terms ordered by max(|p|, q)."""
    yield zero()
    h = 1
    while True:
        seen = []
        for q in range(1, h + 1):
            for p in range(-h, h + 1):
                if max(abs(p), q) == h and p != 0:
                    v = Fraction(p, q)
                    if v.denominator == q:
                        seen.append(v)
        for v in sorted(seen, key=lambda v: (abs(v), v)):
            yield from_value(v)
        h += 1


def _positive_rationals() -> Iterator[ZooPoint]:
    return (p for p in _rationals() if p.value > 0)


def _zero_and_reciprocals() -> Iterator[ZooPoint]:
    yield zero()
    for k in itertools.count(1):
        yield recip(k)


def _recips_and_nats() -> Iterator[ZooPoint]:
    for k in itertools.count(1):
        yield nat(k)
        yield recip(k + 1)


def _ab() -> Iterator[ZooPoint]:
    for k in itertools.count(1):
        yield aseq(k)
        yield bseq(k)


def _zero_and_nats() -> Iterator[ZooPoint]:
    yield zero()
    for k in itertools.count(1):
        yield nat(k)


def _zero_nats_recips() -> Iterator[ZooPoint]:
    yield zero()
    yield nat(1)
    for k in itertools.count(2):
        yield recip(k)
        yield nat(k)


# -- carriers -----------------------------------------------------------------------


def _numeric(p):
    return p.is_numeric


def _zero_or_recip(p):
    return p.tag == ZERO or (p.is_numeric and is_reciprocal_value(p.value))


def _nnuc_carrier(p):
    return p.tag in (NAT, RECIP)


def _ab_carrier(p):
    return p.tag in (ASEQ, BSEQ)


def _positive(p):
    return p.is_numeric and p.value > 0


def _zero_or_nat(p):
    return p.tag in (ZERO, NAT)


def _zero_nat_recip(p):
    return p.tag in (ZERO, NAT, RECIP)


def _v(p):
    return p.value


ONE = Fraction(1)

# -- spaces -------------------------------------------------------------------------


def _other(x: ZooPoint, k: int, make: Callable[[int], ZooPoint]) -> ZooPoint:
    """make(k), or make(k + 1) when that would be x itself."""
    p = make(k)
    return make(k + 1) if p == x else p


def _upper() -> CountableSpace:
    return CountableSpace(
        "upper",
        "upper quasi-metric on the rationals",
        "all rationals",
        _numeric,
        (
            Case("ascending", lambda x, y: y.value >= x.value, lambda x, y: y.value - x.value),
            Case("descending", lambda x, y: True, lambda x, y: Fraction(0)),
        ),
        lambda x: IsoForm(Fraction(0), witness=from_value(x.value - 1)),
        _rationals,
        metadata=("UC space", "left K-complete", "not T1"),
    )


def _lower() -> CountableSpace:
    return CountableSpace(
        "lower",
        "lower quasi-metric (conjugate of upper) on the rationals",
        "all rationals",
        _numeric,
        (
            Case("descending", lambda x, y: x.value >= y.value, lambda x, y: x.value - y.value),
            Case("ascending", lambda x, y: True, lambda x, y: Fraction(0)),
        ),
        lambda x: IsoForm(Fraction(0), witness=from_value(x.value + 1)),
        _rationals,
        metadata=("UC space (every forward continuous real function is constant)", "left K-complete", "its associated metric space is not UC"),
    )


def _sorgenfrey() -> CountableSpace:
    return CountableSpace(
        "sorgenfrey",
        "Sorgenfrey quasi-metric on the rationals",
        "all rationals",
        _numeric,
        (
            Case("ascending", lambda x, y: y.value >= x.value, lambda x, y: y.value - x.value),
            Case("descending", lambda x, y: True, lambda x, y: ONE),
        ),
        lambda x: IsoForm(Fraction(0), approach=lambda k: from_value(x.value + Fraction(1, k))),
        _rationals,
        metadata=("T1", "not left K-complete", "forward topology is the lower limit topology"),
    )


def _rcs_iso(x: ZooPoint) -> IsoForm:
    if x.tag == ZERO:
        return IsoForm(ONE, witness=nat(1))
    k = int(1 / x.value)
    return IsoForm(Fraction(1, k * (k + 1)), witness=recip(k + 1))


def _recip_conj_sorgenfrey() -> CountableSpace:
    return CountableSpace(
        "recip-conj-sorgenfrey",
        "conjugate Sorgenfrey distance on {1/n} with 0",
        "0 and 1/n for n >= 1",
        _zero_or_recip,
        (
            Case("descending", lambda x, y: x.value >= y.value, lambda x, y: x.value - y.value),
            Case("ascending", lambda x, y: True, lambda x, y: ONE),
        ),
        _rcs_iso,
        _zero_and_reciprocals,
        metadata=("T1", "forward convergence implies backward convergence", "associated metric is discrete, hence UC", "not UC"),
    )


def _nnuc_iso(x: ZooPoint) -> IsoForm:
    if x.tag == NAT:
        return IsoForm(ONE, witness=nat(int(x.value) + 1))
    return IsoForm(Fraction(0), approach=lambda k: nat(k))


def _non_normal_uc() -> CountableSpace:
    return CountableSpace(
        "non-normal-uc",
        "reciprocals 1/m (m >= 2) together with the naturals",
        "1/m for m >= 2, and n >= 1",
        _nnuc_carrier,
        (
            Case(
                "recip-recip-down",
                lambda x, y: x.tag == RECIP and y.tag == RECIP and x.value > y.value,
                lambda x, y: x.value - y.value,
            ),
            Case("recip-to-nat", lambda x, y: x.tag == RECIP and y.tag == NAT, lambda x, y: 1 / y.value),
            Case("otherwise", lambda x, y: True, lambda x, y: ONE),
        ),
        _nnuc_iso,
        _recips_and_nats,
        metadata=("T1", "not normal", "UC space", "not left K-complete", "backward convergence implies forward convergence"),
    )


def _ab_iso(x: ZooPoint) -> IsoForm:
    if x.tag == ASEQ:
        return IsoForm(Fraction(0), approach=lambda k: bseq(k))
    return IsoForm(ONE, witness=aseq(1))


def _ab_parallel() -> CountableSpace:
    return CountableSpace(
        "ab-parallel",
        "two disjoint sequences a_n, b_n with d(a_n, b_m) = 1/m",
        "a_n and b_n for n >= 1",
        _ab_carrier,
        (
            Case("a-to-b", lambda x, y: x.tag == ASEQ and y.tag == BSEQ, lambda x, y: Fraction(1, y.index)),
            Case("a-to-a", lambda x, y: x.tag == ASEQ, lambda x, y: ONE),
            Case("from-b", lambda x, y: True, lambda x, y: ONE),
        ),
        _ab_iso,
        _ab,
        metadata=("T1", "not normal: even- and odd-indexed a's are inseparable closed sets", "non-isolated points are not compact", "UC space"),
    )


def _iso_ce_iso(x: ZooPoint) -> IsoForm:
    return IsoForm(Fraction(0), approach=lambda k: _other(x, k, recip))


def _isolation_counterexample() -> CountableSpace:
    return CountableSpace(
        "isolation-counterexample",
        "positive rationals where distances into {1/n} equal the target",
        "positive rationals",
        _positive,
        (
            Case("to-reciprocal", lambda x, y: is_reciprocal_value(y.value), lambda x, y: y.value),
            Case("otherwise", lambda x, y: True, lambda x, y: ONE),
        ),
        _iso_ce_iso,
        _positive_rationals,
        metadata=(
            "T1 but not T2, hence not normal",
            "UC space (forward continuous real functions are constant)",
            "x_n = n has no cluster point although I+(x_n) -> 0",
            "the cover by B+(n, 1/n) and B+(x, 1/2) has no Lebesgue number",
        ),
    )


def _mnat_iso(x: ZooPoint) -> IsoForm:
    if x.tag == ZERO:
        return IsoForm(Fraction(0), approach=lambda k: nat(k))
    return IsoForm(1 / x.value, witness=zero())


def _metrizable_nat() -> CountableSpace:
    return CountableSpace(
        "metrizable-nat",
        "naturals with 0, routed through 0 with d(x,0) = 1/x and d(0,y) = 1/y^2",
        "0 and n >= 1",
        _zero_or_nat,
        (
            Case("to-zero", lambda x, y: y.tag == ZERO, lambda x, y: 1 / x.value),
            Case("from-zero", lambda x, y: x.tag == ZERO, lambda x, y: 1 / y.value**2),
            Case("through-zero", lambda x, y: True, lambda x, y: 1 / x.value + 1 / y.value**2),
        ),
        _mnat_iso,
        _zero_and_nats,
        metadata=("metrizable", "UC space", "x -> 1/x into Sorgenfrey {1/n} with 0 is forward continuous but not uniformly continuous"),
    )


def _ovr_iso(x: ZooPoint) -> IsoForm:
    if x.tag == ZERO:
        return IsoForm(ONE, witness=nat(1))
    return IsoForm(x.value, witness=zero())


def _one_vs_recip() -> CountableSpace:
    return CountableSpace(
        "one-vs-recip",
        "{1/n} with 0, d(0, 1/n) = 1 and d(1/n, 0) = 1/n",
        "0 and 1/n for n >= 1",
        _zero_or_recip,
        (
            Case("zero-to-recip", lambda x, y: x.tag == ZERO, lambda x, y: ONE),
            Case("recip-to-zero", lambda x, y: y.tag == ZERO, lambda x, y: x.value),
            Case("otherwise", lambda x, y: True, lambda x, y: ONE),
        ),
        _ovr_iso,
        _zero_and_reciprocals,
        metadata=(
            "T2",
            "forward convergence implies backward convergence, not conversely",
            "no pseudo left K-Cauchy sequence of distinct terms",
            "not UC",
        ),
    )


def _stz_iso(x: ZooPoint) -> IsoForm:
    if x.tag == ZERO:
        return IsoForm(Fraction(0), approach=lambda k: nat(k))
    return IsoForm(x.value, witness=zero())


def _sum_through_zero() -> CountableSpace:
    return CountableSpace(
        "sum-through-zero",
        "0, naturals and reciprocals with d(x,y) = x + 1/y routed through 0",
        "0, n >= 1 and 1/n for n >= 2",
        _zero_nat_recip,
        (
            Case("to-zero", lambda x, y: y.tag == ZERO, lambda x, y: x.value),
            Case("from-zero", lambda x, y: x.tag == ZERO, lambda x, y: 1 / y.value),
            Case("through-zero", lambda x, y: True, lambda x, y: x.value + 1 / y.value),
        ),
        _stz_iso,
        _zero_nats_recips,
        metadata=("T2", "n forward converges to 0 but not backward", "not UC"),
    )


_BUILDERS = (
    _upper,
    _lower,
    _sorgenfrey,
    _recip_conj_sorgenfrey,
    _non_normal_uc,
    _ab_parallel,
    _isolation_counterexample,
    _metrizable_nat,
    _one_vs_recip,
    _sum_through_zero,
)

# -- claims -------------------------------------------------------------------------

Runner = Callable[[dict, int, object], Verdict]


@dataclass(frozen=True)
class Claim:
    """An executable statement about a zoo space and the outcome it must have."""

    id: str
    space: str
    statement: str
    expect: str  # "holds" | "fails"
    run: Runner = field(repr=False, compare=False)

    def execute(self, catalog: dict, horizon: Optional[int] = None, eps=DEFAULT_EPS_GRID) -> Verdict:
        return self.run(catalog, horizon or DEFAULT_HORIZON, eps)


def _all(verdicts: Iterable[Verdict]) -> Verdict:
    return combine(list(verdicts))


def _holds(h, note=None, basis="exact", cert=None) -> Verdict:
    return Verdict(Outcome.HOLDS, h, basis, cert, note=note)


def _truncation_axioms(sid: str, size: int = 30) -> Runner:
    def run(cat, h, eps):
        S = truncation(cat[sid], size)
        rep = S.validate()
        if rep.valid:
            return _holds(h, f"{size}-point truncation passes every axiom")
        v = rep.violations[0]
        vals = tuple(as_fraction(x) for x in v.values)
        return Verdict(Outcome.FAILS, h, "exact", f"{size}-point truncation", Witness((), v.points, vals[0], vals[-1], v.axiom), note=str(v))

    return run


def _truncation_t1(sid: str, size: int = 40) -> Runner:
    def run(cat, h, eps):
        S = truncation(cat[sid], size)
        for i, x in enumerate(S.points):
            for j, y in enumerate(S.points):
                if i != j and S.table[i][j] == 0:
                    return Verdict(Outcome.FAILS, h, "exact", f"{size}-point truncation", Witness((), (x, y), Fraction(0), Fraction(0), "distance=0"))
        return _holds(h, f"{size}-point truncation is T1")

    return run


def _isolation_check(sid: str, points: Callable[[], list], expected: Callable[[ZooPoint], Fraction]) -> Runner:
    """Closed form equals the expected value and agrees with truncation minima."""

    def run(cat, h, eps):
        Z = cat[sid]
        K = min(h, 200)
        others = Z.prefix(K)
        for x in points():
            x = Z.canonical(x)
            form = Z.isolation(x)
            want = expected(x)
            if form.value != want:
                return Verdict(Outcome.FAILS, h, "exact", "closed form", Witness((), (str(x),), form.value, want, "closed-form!=expected"))
            for y in others:
                if y != x and Z.distance(x, y) < form.value:
                    return Verdict(Outcome.FAILS, h, "exact", "closed form is a lower bound", Witness((), (str(x), str(y)), Z.distance(x, y), form.value, "distance<inf"))
            if form.attained:
                w = form.witness
                if w == x or Z.distance(x, w) != form.value:
                    return Verdict(Outcome.FAILS, h, "exact", "attainment", Witness((), (str(x), str(w)), Z.distance(x, w), form.value, "distance!=inf"))
            else:
                for k in range(1, K + 1):
                    y = form.approach(k)
                    v = Z.distance(x, y)
                    if y == x or v > form.value + Fraction(1, k):
                        return Verdict(Outcome.FAILS, h, "exact", "approach envelope 1/k", Witness((k,), (str(x), str(y)), v, form.value + Fraction(1, k), "distance>envelope"))
        return _holds(h, f"closed form matches; truncation minima within 1/k up to k={K}")

    return run


def _conv(sid, seq, target, direction="forward", modulus=None, refute=None) -> Runner:
    def run(cat, h, eps):
        return check_convergence(cat[sid], seq, target, direction, horizon=h, modulus=modulus, refute=refute, eps=eps)

    return run


def _conv_many(sid, seq, targets, modulus=None, refutes=None) -> Runner:
    def run(cat, h, eps):
        out = []
        for i, t in enumerate(targets):
            r = None if refutes is None else refutes[i]
            out.append(check_convergence(cat[sid], seq, t, "forward", horizon=h, modulus=modulus, refute=r, eps=eps))
        return _all(out)

    return run


def _cauchy(sid, seq, variant, modulus=None, refute=None) -> Runner:
    def run(cat, h, eps):
        return check_cauchy(cat[sid], seq, variant, horizon=h, modulus=modulus, refute=refute, eps=eps)

    return run


def _par(sid, a, b, direction="forward", modulus=None, refute=None) -> Runner:
    def run(cat, h, eps):
        return check_parallel(cat[sid], a, b, direction, horizon=h, modulus=modulus, refute=refute, eps=eps)

    return run


def _nonuc(sid, f, sx, sy, e, modulus, n0=1) -> Runner:
    def run(cat, h, eps):
        return verify_nonuc_witness(NonUCWitness(cat[sid], f, sx, sy, e, modulus, n0), h, eps)

    return run


def _set_distance_bound(sid, A, B, bound, cap=1000) -> Runner:
    from .functionals import parse_set, set_distance

    def run(cat, h, eps):
        H = min(h, cap)
        b = set_distance(cat[sid], parse_set(A), parse_set(B), H)
        if b.value <= bound:
            return _holds(H, f"d(A,B) <= {fmt(b.value)} <= {fmt(bound)} over the first {H} of each set", "horizon", f"upper bound {fmt(b.value)}")
        return Verdict(Outcome.UNKNOWN, H, "horizon", f"upper bound {fmt(b.value)}", note=f"bound not yet below {fmt(bound)}")

    return run


def _conjugate_truncation(sid, other, size=30) -> Runner:
    def run(cat, h, eps):
        pts = cat[sid].prefix(size)
        a = restrict(cat[sid], pts)
        b = conjugate(restrict(cat[other], pts))
        for i, x in enumerate(a.points):
            for j, y in enumerate(a.points):
                if a.table[i][j] != b.table[i][j]:
                    return Verdict(Outcome.FAILS, h, "exact", f"conjugate of {other}", Witness((), (x, y), a.table[i][j], b.table[i][j], "entry!=conjugate"))
        return _holds(h, f"agrees with the conjugate of {other} on {size} points")

    return run


def _uc_sampled(sid, f, rule, points: Callable[[], list]) -> Runner:
    def run(cat, h, eps):
        pts = points()[: max(2, min(h, len(points())))]
        return verify_uc_modulus_sampled(cat[sid], f, rule, points=pts, horizon=len(pts), eps=eps)

    return run


def _both(*runners: Runner) -> Runner:
    def run(cat, h, eps):
        return _all(r(cat, h, eps) for r in runners)

    return run


R = Indexed("reciprocals")
N = Indexed("naturals")


def _claims() -> list[Claim]:
    recip_f = Reciprocal(0)
    C = []
    add = lambda *a: C.append(Claim(*a))
    for sid in [b().id for b in _BUILDERS]:
        add(f"{sid}/axioms", sid, "distance rule is a quasi-metric on a truncation", "holds", _truncation_axioms(sid))

    add("S1", "sorgenfrey", "1/n forward converges to 0, N(eps) = ceil(1/eps)+1", "holds",
        _conv("sorgenfrey", R, zero(), modulus=Ceil(1, offset=1)))
    add("S2", "sorgenfrey", "1/n does not converge backward to 0: d(1/n, 0) = 1", "fails",
        _conv("sorgenfrey", R, zero(), "backward", refute=LowerBound(1)))
    add("S3", "sorgenfrey", "1/n is not left K-Cauchy: d(1/k, 1/(k+1)) = 1 >= 1/2", "fails",
        _cauchy("sorgenfrey", R, "leftK", refute=LowerBound(Fraction(1, 2), gap=1)))
    add("S4", "sorgenfrey", "-1/n is left K-Cauchy, N(eps) = ceil(1/eps)", "holds",
        _cauchy("sorgenfrey", Indexed("negated-reciprocals"), "leftK", modulus=Ceil(1)))
    add("S5", "sorgenfrey", "-1/n does not forward converge to 0, -1 or -1/2", "fails",
        _conv_many("sorgenfrey", Indexed("negated-reciprocals"), [zero(), from_value(-1), from_value(Fraction(-1, 2))],
                   refutes=[LowerBound(1), LowerBound(Fraction(1, 2), start=2), LowerBound(Fraction(1, 6), start=3)]))
    add("S6", "sorgenfrey", "truncations are T1", "holds", _truncation_t1("sorgenfrey"))

    add("U1", "upper", "n+1 is forward parallel to n (distance 0)", "holds",
        _par("upper", Indexed("naturals", offset=1), N, modulus=Const(1)))
    add("U2", "upper", "n+1 is not backward parallel to n: d(n, n+1) = 1", "fails",
        _par("upper", Indexed("naturals", offset=1), N, "backward", refute=LowerBound(1)))

    targets = [zero(), from_value(Fraction(1, 2)), nat(3), from_value(-2)]
    add("L1", "lower", "x+n forward converges to every target y", "holds",
        _conv_many("lower", N, targets, modulus=Const(4)))
    add("L2", "lower", "lower distance is the conjugate of the upper distance", "holds",
        _conjugate_truncation("lower", "upper"))

    add("N1", "non-normal-uc", "n forward converges to 1/m for m = 2..50", "holds",
        _conv_many("non-normal-uc", N, [recip(m) for m in range(2, 51)], modulus=Ceil(1, offset=1)))
    add("N2", "non-normal-uc", "1/n is left K-Cauchy, N(eps) = ceil(1/eps)+1", "holds",
        _cauchy("non-normal-uc", R, "leftK", modulus=Ceil(1, offset=1)))
    add("N3", "non-normal-uc", "1/(n+1) stays away from the points 1, 2, 1/2, 1/5", "fails",
        _conv_many("non-normal-uc", Indexed("reciprocals", offset=1), [nat(1), nat(2), recip(2), recip(5)],
                   refutes=[LowerBound(1), LowerBound(1), LowerBound(Fraction(1, 6), start=2), LowerBound(Fraction(1, 30), start=5)]))
    add("N4", "non-normal-uc", "d(A,B) = 0 for A = {1/2n}, B = {1/(2n+1)}: bound <= 1/10^6 at 1000 terms", "holds",
        _set_distance_bound("non-normal-uc", "evens-of(reciprocals)", "odds-of(reciprocals)[3..]", Fraction(1, 10**6)))
    add("N5", "non-normal-uc", "1/(n+1) is pseudo left K-Cauchy", "holds",
        _cauchy("non-normal-uc", Indexed("reciprocals", offset=1), "pseudo-leftK"))
    add("N6", "non-normal-uc", "truncations are T1", "holds", _truncation_t1("non-normal-uc"))

    add("AB1", "ab-parallel", "b_n forward converges to a_k for k = 1..20", "holds",
        _conv_many("ab-parallel", Indexed("b-seq"), [aseq(k) for k in range(1, 21)], modulus=Ceil(1, offset=1)))
    add("AB2", "ab-parallel", "a_n is forward parallel to b_n", "holds",
        _par("ab-parallel", Indexed("a-seq"), Indexed("b-seq"), modulus=Ceil(1, offset=1)))
    add("AB3", "ab-parallel", "truncations are T1", "holds", _truncation_t1("ab-parallel"))

    add("I1", "isolation-counterexample", "I+(n) = 0 for n = 1..50", "holds",
        _isolation_check("isolation-counterexample", lambda: [nat(n) for n in range(1, 51)], lambda x: Fraction(0)))
    add("I2", "isolation-counterexample", "1/n forward converges to 1/m for m = 1..20", "holds",
        _conv_many("isolation-counterexample", R, [recip(m) for m in range(1, 21)], modulus=Ceil(1, offset=1)))
    add("I3", "isolation-counterexample", "truncations are T1", "holds", _truncation_t1("isolation-counterexample"))

    add("M1", "metrizable-nat", "n is forward parallel to n+1", "holds",
        _par("metrizable-nat", N, Indexed("naturals", offset=1), modulus=Ceil(2, offset=1)))
    add("M2", "metrizable-nat", "images 1/n and 1/(n+1) are not forward parallel in Sorgenfrey", "fails",
        _par("sorgenfrey", R, Indexed("reciprocals", offset=1), refute=LowerBound(1)))
    add("M3", "metrizable-nat", "I+(0) = 0 and I+(n) = 1/n", "holds",
        _isolation_check("metrizable-nat", lambda: [zero()] + [nat(n) for n in range(1, 31)],
                         lambda x: Fraction(0) if x.tag == ZERO else 1 / x.value))

    add("O1", "one-vs-recip", "f = 1/x is not UC: 1/n parallel to 0, gap >= 1", "holds",
        _nonuc("one-vs-recip", recip_f, R, Constant(zero()), 1, Ceil(1, offset=1)))
    add("O2", "one-vs-recip", "1/n is not pseudo left K-Cauchy: distinct terms are 1 apart", "fails",
        _cauchy("one-vs-recip", R, "pseudo-leftK", refute=LowerBound(1)))
    add("O3", "one-vs-recip", "I+(0) = 1 and I+(1/n) = 1/n", "holds",
        _isolation_check("one-vs-recip", lambda: [zero()] + [recip(n) for n in range(1, 31)],
                         lambda x: ONE if x.tag == ZERO else x.value))

    add("Z1", "sum-through-zero", "f = 1/x is not UC: 1/n parallel to 0, gap >= 1", "holds",
        _nonuc("sum-through-zero", recip_f, R, Constant(zero()), 1, Ceil(1, offset=1)))
    add("Z2", "sum-through-zero", "n forward converges to 0", "holds",
        _conv("sum-through-zero", N, zero(), modulus=Ceil(1, offset=1)))
    add("Z3", "sum-through-zero", "n does not converge backward to 0: d(n, 0) = n", "fails",
        _conv("sum-through-zero", N, zero(), "backward", refute=LowerBound(1)))
    add("Z4", "sum-through-zero", "f = 1/x admits no delta = eps modulus", "fails",
        _uc_sampled("sum-through-zero", recip_f, ScaleDelta(1), lambda: sum_through_zero_points(100, with_zero=True)))
    f5 = IndexValue.of(recip=(1, 1), nat=(1, 2))
    add("Z5", "sum-through-zero", "on {1/k, k : k >= 2}, f(1/k) = 1/k, f(k) = 1/k^2 passes delta = eps while 1/f is not UC", "holds",
        _both(
            _uc_sampled("sum-through-zero", f5, ScaleDelta(1), lambda: sum_through_zero_points(60, with_zero=False)),
            _nonuc("sum-through-zero", InverseOf(f5), Indexed("reciprocals", offset=1), Indexed("naturals", offset=1), 2, Ceil(2)),
        ))

    add("R1", "recip-conj-sorgenfrey", "f = 1/x is not UC: 1/n parallel to 1/(n+1), gap 1", "holds",
        _nonuc("recip-conj-sorgenfrey", recip_f, R, Indexed("reciprocals", offset=1), 1, Ceil(1)))
    add("R2", "recip-conj-sorgenfrey", "truncations are T1", "holds", _truncation_t1("recip-conj-sorgenfrey"))
    add("R3", "recip-conj-sorgenfrey", "I+(0) = 1 and I+(1/k) = 1/(k(k+1))", "holds",
        _isolation_check("recip-conj-sorgenfrey", lambda: [zero()] + [recip(n) for n in range(1, 31)],
                         lambda x: ONE if x.tag == ZERO else Fraction(1, int(1 / x.value) * (int(1 / x.value) + 1))))
    return C


def sum_through_zero_points(k: int, with_zero: bool) -> list[ZooPoint]:
    """1/j and j for 2 <= j <= k+1 (plus 0 if asked)."""
    pts = [zero()] if with_zero else []
    for j in range(2, k + 2):
        pts += [recip(j), nat(j)]
    return pts


# -- mutations ------------------------------------------------------------------------


@dataclass(frozen=True)
class Mutation:
    """Replace one distance case, or flip one claim's expected outcome."""

    id: str
    space: str
    case: Optional[str] = None
    value: Optional[Callable] = field(default=None, compare=False, repr=False)
    claim: Optional[str] = None


def _m(space, case, value):
    return Mutation(f"{space}:{case}", space, case, value)


def _flip(space, claim):
    return Mutation(f"{space}:expect:{claim}", space, claim=claim)


MUTATIONS = (
    _m("sorgenfrey", "descending", lambda x, y: Fraction(0)),
    _m("sorgenfrey", "ascending", lambda x, y: 2 * (y.value - x.value)),
    _m("upper", "descending", lambda x, y: ONE),
    _m("upper", "ascending", lambda x, y: (y.value - x.value) / 2),
    _m("lower", "ascending", lambda x, y: ONE),
    _m("lower", "descending", lambda x, y: x.value - y.value + 1),
    _m("recip-conj-sorgenfrey", "descending", lambda x, y: ONE),
    _m("recip-conj-sorgenfrey", "ascending", lambda x, y: Fraction(0)),
    _m("non-normal-uc", "recip-to-nat", lambda x, y: ONE),
    _m("non-normal-uc", "recip-recip-down", lambda x, y: ONE),
    _m("non-normal-uc", "otherwise", lambda x, y: Fraction(0)),
    _m("ab-parallel", "a-to-b", lambda x, y: ONE),
    _m("ab-parallel", "from-b", lambda x, y: Fraction(0)),
    _m("isolation-counterexample", "to-reciprocal", lambda x, y: ONE),
    _m("metrizable-nat", "through-zero", lambda x, y: ONE),
    _m("metrizable-nat", "to-zero", lambda x, y: x.value),
    _m("one-vs-recip", "recip-to-zero", lambda x, y: ONE),
    _m("one-vs-recip", "otherwise", lambda x, y: Fraction(0)),
    _m("sum-through-zero", "to-zero", lambda x, y: ONE),
    _m("sum-through-zero", "from-zero", lambda x, y: ONE),
    _m("sum-through-zero", "through-zero", lambda x, y: ONE),
    _flip("sorgenfrey", "S1"),
    _flip("upper", "U2"),
    _flip("non-normal-uc", "N4"),
    _flip("recip-conj-sorgenfrey", "R1"),
    _flip("one-vs-recip", "O2"),
)


def _apply(space: CountableSpace, m: Mutation) -> CountableSpace:
    if m.case is not None:
        names = [c.name for c in space.cases]
        if m.case not in names:
            raise KeyError(f"{space.id} has no case {m.case!r}")
        cases = tuple(replace(c, value=m.value) if c.name == m.case else c for c in space.cases)
        return replace(space, cases=cases)
    ids = [c.id for c in space.claims]
    if m.claim not in ids:
        raise KeyError(f"{space.id} has no claim {m.claim!r}")
    flip = {"holds": "fails", "fails": "holds"}
    claims = tuple(replace(c, expect=flip[c.expect]) if c.id == m.claim else c for c in space.claims)
    return replace(space, claims=claims)


def build_catalog(mutations: Iterable[Mutation] = ()) -> dict[str, CountableSpace]:
    claims = _claims()
    cat = {}
    for b in _BUILDERS:
        s = b()
        cat[s.id] = replace(s, claims=tuple(c for c in claims if c.space == s.id))
    for m in mutations:
        cat[m.space] = _apply(cat[m.space], m)
    return cat


_CATALOG: Optional[dict] = None


def zoo_get(sid: str) -> CountableSpace:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = build_catalog()
    try:
        return _CATALOG[sid]
    except KeyError:
        raise KeyError(f"unknown zoo space {sid!r}; known: {', '.join(_CATALOG)}") from None


def zoo_ids() -> list[str]:
    return [b().id for b in _BUILDERS]
