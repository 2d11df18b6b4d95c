import random
from fractions import Fraction

import pytest

from quasiuc import oracles
from quasiuc.points import aseq, bseq, from_value, nat, recip, zero
from quasiuc.sequences import (
    Ceil,
    Const,
    Constant,
    FromList,
    Indexed,
    Interleave,
    LowerBound,
    MaxOf,
    Outcome,
    SequenceError,
    Verdict,
    check_cauchy,
    check_convergence,
    check_parallel,
    cluster_points_finite,
    combine,
    eps_grid,
    evaluate,
    tail_closures,
    v_f,
)
from quasiuc.space import FiniteSpace, random_space
from quasiuc.zoo import zoo_get

R = Indexed("reciprocals")


def test_eval_examples():
    assert evaluate(Constant("a"), 7) == "a"
    assert evaluate(Indexed("reciprocals", 0), 4) == recip(4)
    x, y = Indexed("naturals"), Indexed("reciprocals", 1)
    assert evaluate(Interleave(x, y), 3) == evaluate(x, 2)
    assert evaluate(Interleave(x, y), 4) == evaluate(y, 2)
    assert evaluate(FromList(("p",), ("a", "b")), 4) == "a"
    assert evaluate(Indexed("naturals", shift=Fraction(1, 2)), 1) == from_value(Fraction(3, 2))
    assert evaluate(Indexed("negated-reciprocals"), 2) == from_value(Fraction(-1, 2))
    assert evaluate(Indexed("a-seq", scale=2), 3) == aseq(6)


def test_eval_rejects_bad_input():
    with pytest.raises(SequenceError):
        evaluate(R, 0)
    with pytest.raises(SequenceError):
        FromList(("a",), ())
    with pytest.raises(SequenceError):
        Indexed("primes")


def test_reciprocal_one_is_natural_one():
    # 1/1 and 1 are the same rational point
    assert evaluate(R, 1) == nat(1)


def test_moduli():
    assert Ceil(1)(Fraction(1, 3)) == 3
    assert Ceil(1, offset=1)(Fraction(1, 3)) == 4
    assert Ceil(1, power=2)(Fraction(1, 3)) == 9
    assert Const(5)(Fraction(1, 100)) == 5
    assert MaxOf(Ceil(1), Const(7))(Fraction(1, 3)) == 7
    grid = eps_grid(8)
    for m in (Ceil(2), Ceil(1, 2, 3), MaxOf(Ceil(1), Const(4))):
        vals = [m(e) for e in grid]
        assert vals == sorted(vals)  # nonincreasing in eps, grid is decreasing


def test_sorgenfrey_forward_convergence():
    Z = zoo_get("sorgenfrey")
    v = check_convergence(Z, R, zero(), modulus=Ceil(1, offset=1))
    assert v.holds and v.basis == "modulus"


def test_sorgenfrey_not_backward_convergent():
    Z = zoo_get("sorgenfrey")
    v = check_convergence(Z, R, zero(), "backward", refute=LowerBound(1))
    assert v.fails
    assert v.witness.value == 1
    n = v.witness.indices[0]
    assert Z.distance(evaluate(R, n), zero()) == 1


def test_backward_without_certificate_is_not_a_proof():
    Z = zoo_get("sorgenfrey")
    v = check_convergence(Z, R, zero(), "backward", horizon=200)
    assert not v.holds


def test_sorgenfrey_not_left_k_cauchy():
    Z = zoo_get("sorgenfrey")
    v = check_cauchy(Z, R, "leftK", refute=LowerBound(Fraction(1, 2)))
    assert v.fails
    k, n = v.witness.indices
    assert n == k + 1
    assert Z.distance(evaluate(R, k), evaluate(R, n)) == 1 >= Fraction(1, 2)


def test_negated_reciprocals_left_k_cauchy():
    Z = zoo_get("sorgenfrey")
    v = check_cauchy(Z, Indexed("negated-reciprocals"), "leftK", modulus=Ceil(1))
    assert v.holds


def test_wrong_modulus_is_caught():
    Z = zoo_get("sorgenfrey")
    v = check_convergence(Z, R, zero(), modulus=Const(1))
    assert v.fails
    k = v.witness.indices[0]
    assert Z.distance(zero(), evaluate(R, k)) >= v.witness.eps


def test_lower_quasi_metric_eventually_zero():
    Z = zoo_get("lower")
    seq = Indexed("naturals", shift=Fraction(1, 3))
    for y in (from_value(Fraction(5)), from_value(Fraction(-2, 7)), zero()):
        assert check_convergence(Z, seq, y, horizon=500).holds


def test_pseudo_cauchy_interleaved_pairs():
    Z = zoo_get("ab-parallel")
    seq = Interleave(Indexed("a-seq"), Indexed("b-seq"))
    assert check_cauchy(Z, seq, "pseudo-leftK", horizon=2000).holds


def test_pseudo_refutation_needs_certificate():
    Z = zoo_get("one-vs-recip")
    assert check_cauchy(Z, R, "pseudo-leftK", horizon=300).unknown
    assert check_cauchy(Z, R, "pseudo-leftK", refute=LowerBound(1)).fails
    with pytest.raises(ValueError):
        check_cauchy(Z, R, "pseudo-leftK", modulus=Ceil(1))


def test_contradicted_certificate_is_flagged():
    Z = zoo_get("sorgenfrey")
    v = check_convergence(Z, R, zero(), refute=LowerBound(1))
    assert v.unknown and v.note == "certificate contradicted"


def test_upper_parallel_examples():
    Z = zoo_get("upper")
    up = Indexed("naturals", offset=1)
    n = Indexed("naturals")
    assert check_parallel(Z, up, n, modulus=Const(1)).holds
    v = check_parallel(Z, up, n, "backward", refute=LowerBound(1))
    assert v.fails
    k = v.witness.indices[0]
    assert Z.distance(evaluate(n, k), evaluate(up, k)) == 1


@pytest.mark.parametrize("sid", ["upper", "sorgenfrey", "non-normal-uc", "ab-parallel"])
def test_parallel_to_itself(sid):
    Z = zoo_get(sid)
    seq = Indexed("a-seq") if sid == "ab-parallel" else Indexed("naturals", offset=1)
    for w in ("forward", "backward"):
        assert check_parallel(Z, seq, seq, w, horizon=300, modulus=Const(1)).holds


def test_fails_is_monotone_in_horizon():
    Z = zoo_get("sorgenfrey")
    for H in (50, 500, 5000):
        assert check_cauchy(Z, R, "leftK", horizon=H, refute=LowerBound(Fraction(1, 2))).fails
        assert check_convergence(Z, R, zero(), "backward", horizon=H, refute=LowerBound(1)).fails


def test_cluster_examples():
    T1 = FiniteSpace(("a", "b"), [[0, 1], [1, 0]])
    assert cluster_points_finite(T1, Constant("a")) == {"a"}
    S = FiniteSpace(("a", "b"), [[0, 1], [0, 0]])  # d(b, a) = 0
    assert cluster_points_finite(S, Constant("a")) == {"a", "b"}
    ent = FiniteSpace(("c", "d", "z"), [[0, 1, 0], [1, 0, 0], [1, 1, 0]])
    per = FromList(("c",), ("c", "d"))
    assert cluster_points_finite(ent, per) == cluster_points_finite(ent, Constant("c")) | cluster_points_finite(ent, Constant("d"))
    with pytest.raises(SequenceError):
        cluster_points_finite(ent, Indexed("naturals"))


def test_cluster_oracle_agreement_small():
    rng = random.Random(4)
    for _ in range(200):
        S = random_space(rng, rng.randint(1, 5), q=2)
        pts = list(S.points)
        seq = FromList(tuple(rng.choice(pts) for _ in range(2)), tuple(rng.choice(pts) for _ in range(rng.randint(1, 3))))
        assert cluster_points_finite(S, seq) == oracles.cluster_points_bruteforce(S, seq.prefix, seq.period)


def test_periodic_convergence_matches_cluster_when_constant():
    rng = random.Random(6)
    for _ in range(100):
        S = random_space(rng, rng.randint(2, 5), q=2)
        a = rng.choice(S.points)
        seq = FromList((rng.choice(S.points),), (a,))
        for x in S.points:
            assert check_convergence(S, seq, x).holds == (x in cluster_points_finite(S, seq))


def test_v_f_examples():
    S = FiniteSpace(("a", "b"), [[0, Fraction(1, 3)], [1, 0]])
    assert v_f(S, Constant("a")) == (0, True)
    assert v_f(S, FromList((), ("a", "b"))) == (Fraction(1, 3), True)
    # pairs (a_n, b_n) with d(a_n, b_n) = 1/n; the tail from n has sup 1/n
    Z = zoo_get("ab-parallel")
    for n in (1, 3, 10):
        tail = Interleave(Indexed("a-seq", offset=n - 1), Indexed("b-seq", offset=n - 1))
        val = v_f(Z, tail, horizon=200)
        assert not val.exact and val.value <= Fraction(1, n)
    with pytest.raises(ValueError):
        v_f(Z, tail, horizon=0)


def test_tail_closures_shrink():
    S = FiniteSpace(("a", "b", "c"), [[0, 1, 1], [0, 0, 1], [1, 1, 0]])
    chain, inter = tail_closures(S, FromList(("c", "c"), ("a",)), 3)
    assert all(later <= earlier for earlier, later in zip(chain, chain[1:]))
    assert inter == {"a", "b"}


def test_verdict_json_round_trip():
    Z = zoo_get("sorgenfrey")
    v = check_cauchy(Z, R, "leftK", refute=LowerBound(Fraction(1, 2)))
    assert Verdict.from_json(v.to_json()) == v
    assert "FAILS" in str(v)


def test_combine():
    h = Verdict(Outcome.HOLDS, 1)
    u = Verdict(Outcome.UNKNOWN, 1)
    f = Verdict(Outcome.FAILS, 1)
    assert combine([h, u, f]) is f
    assert combine([h, u]) is u
    assert combine([h]) is h
    with pytest.raises(ValueError):
        combine([])


def test_unknown_at_small_horizon():
    Z = zoo_get("non-normal-uc")
    v = check_cauchy(Z, Indexed("reciprocals", offset=1), "leftK", horizon=10)
    assert v.unknown
