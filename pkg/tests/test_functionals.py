import itertools
import random
from fractions import Fraction

import pytest

from quasiuc import oracles
from quasiuc.functionals import (
    Explicit,
    Family,
    SetSpecError,
    SetUnion,
    contains,
    discreteness_gap,
    enumerate_set,
    isolation,
    parse_set,
    set_distance,
)
from quasiuc.points import nat, recip, zero, aseq, bseq
from quasiuc.rational import INF
from quasiuc.space import FiniteSpace, discrete_metric, random_space
from quasiuc.zoo import restrict, truncation, zoo_get


def test_parse_set_forms():
    assert parse_set("{a, b,c}") == Explicit(("a", "b", "c"))
    assert parse_set("reciprocals[2..]") == Family("reciprocals", 2)
    assert parse_set("naturals[1..]") == Family("naturals", 1)
    assert parse_set("evens-of(reciprocals)") == Family("reciprocals", parity="even")
    assert parse_set("odds-of(reciprocals)[3..9]") == Family("reciprocals", 3, 9, "odd")
    u = parse_set("a-seq | b-seq")
    assert isinstance(u, SetUnion) and len(u.parts) == 2
    for bad in ("{}", "primes[1..]", "reciprocals[0..]", "evens-of(naturals)[3..3]", "[1..2]"):
        with pytest.raises(SetSpecError):
            parse_set(bad)


def test_enumeration_order():
    Z = zoo_get("non-normal-uc")
    got = list(itertools.islice(enumerate_set(Z, parse_set("evens-of(reciprocals)")), 3))
    assert got == [recip(2), recip(4), recip(6)]
    ab = list(itertools.islice(enumerate_set(zoo_get("ab-parallel"), parse_set("a-seq | b-seq")), 4))
    assert ab == [aseq(1), bseq(1), aseq(2), bseq(2)]


def test_contains():
    Z = zoo_get("non-normal-uc")
    A = parse_set("evens-of(reciprocals)")
    assert contains(Z, A, recip(8)) and not contains(Z, A, recip(7))
    assert not contains(Z, A, nat(2))


def test_isolation_finite_examples():
    D = discrete_metric(["a", "b", "c"])
    assert all(isolation(D, x) == (1, True) for x in D.points)
    with pytest.raises(ValueError):
        isolation(FiniteSpace(("a",), [[0]]), "a")


def test_isolation_finite_matches_ball_oracle():
    rng = random.Random(7)
    for _ in range(100):
        S = random_space(rng, rng.randint(2, 7))
        if len(S) < 2:
            continue
        for x in S.points:
            assert isolation(S, x).value == oracles.isolation_bruteforce(S, x)


def test_isolation_one_vs_recip_closed_form():
    Z = zoo_get("one-vs-recip")
    assert isolation(Z, zero()) == (1, True)
    for n in (2, 3, 10, 57):
        assert isolation(Z, recip(n)) == (Fraction(1, n), True)
    # truncation minima approach the closed form from above
    T = truncation(Z, 80)
    assert isolation(T, "0").value == 1
    assert isolation(T, "1/5").value == Fraction(1, 5)


def test_isolation_counterexample_naturals_have_zero():
    Z = zoo_get("isolation-counterexample")
    for n in range(1, 51):
        assert isolation(Z, nat(n)) == (0, True)
    # at a horizon the value is only an upper bound, and it shrinks
    b1, b2 = isolation(Z, nat(1), horizon=50), isolation(Z, nat(1), horizon=500)
    assert not b1.exact and b2.value <= b1.value


def test_truncation_caveat():
    Z = zoo_get("isolation-counterexample")
    T = restrict(Z, [nat(1), nat(2), recip(2), recip(3)])
    assert isolation(T, "1").value == Fraction(1, 3)
    assert isolation(Z, nat(1)).value == 0


def test_set_distance_examples():
    D = discrete_metric(["a", "b", "c", "d"])
    assert set_distance(D, "a", Explicit(("a", "c"))) == (0, True)
    assert set_distance(D, Explicit(("a", "b")), Explicit(("c", "d"))) == (1, True)
    with pytest.raises(SetSpecError):
        Explicit(())


def test_set_distance_horizon_bound():
    Z = zoo_get("non-normal-uc")
    A, B = parse_set("evens-of(reciprocals)"), parse_set("odds-of(reciprocals)[3..]")
    b = set_distance(Z, A, B, horizon=100)
    assert not b.exact
    assert b.value == Fraction(1, 200) - Fraction(1, 201) == Fraction(1, 200 * 201)


def test_set_distance_is_below_every_member():
    Z = zoo_get("sorgenfrey")
    A = parse_set("reciprocals[2..]")
    x = nat(3)
    b = set_distance(Z, x, A, horizon=40)
    for a in itertools.islice(enumerate_set(Z, A), 40):
        assert b.value <= Z.distance(x, a)


def test_gap_examples():
    D = discrete_metric(["a", "b", "c"])
    assert discreteness_gap(D, ["a"]) == (INF, True)
    assert discreteness_gap(D, ["a", "b", "c"]) == (1, True)
    Z = zoo_get("ab-parallel")
    small, big = discreteness_gap(Z, parse_set("a-seq | b-seq"), horizon=20), discreteness_gap(Z, parse_set("a-seq | b-seq"), horizon=200)
    assert big.value < small.value <= Fraction(1, 10)
    assert not big.exact


def test_gap_orientation_flag():
    S = FiniteSpace(("a", "b"), [[0, 0], [1, 0]])
    assert discreteness_gap(S, ["a", "b"]).value == 0
    assert discreteness_gap(S, ["a", "b"], both_orders=False).value == 1


def test_gap_is_the_finite_minimum():
    rng = random.Random(1)
    for _ in range(50):
        S = random_space(rng, rng.randint(2, 6))
        pts = list(S.points)
        if len(pts) < 2:
            continue
        want = min(S.d(x, y) for x in pts for y in pts if x != y)
        assert discreteness_gap(S, pts) == (want, True)
