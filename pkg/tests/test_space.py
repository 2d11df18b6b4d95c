import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasiuc.space import (
    FiniteSpace,
    StructureError,
    UnknownPointError,
    ball,
    conjugate,
    discrete_metric,
    is_T1,
    random_non_t1_space,
    random_raw_table,
    random_space,
    separation_quotient,
    sup_metric,
    triangle_closure,
    validate_axioms,
)
from quasiuc.zoo import restrict, zoo_get
from quasiuc.points import from_value

F = Fraction


def test_single_point_is_valid():
    assert validate_axioms([[0]], ["a"]).valid


def test_upper_pair_is_valid(upper01):
    assert upper01.validate().valid


def test_separation_violation_reported():
    rep = validate_axioms([[0, 0], [0, 0]], ["a", "b"])
    assert not rep.valid
    assert [(v.axiom, v.points) for v in rep.violations] == [("separation", ("a", "b"))]


def test_triangle_violation_reported():
    rep = validate_axioms([[0, 1, 3], [1, 0, 1], [3, 1, 0]], ["a", "b", "c"])
    tri = rep.by_axiom("triangle")
    assert ("a", "b", "c") in [v.points for v in tri]
    assert tri[0].values == (F(3), F(1), F(1))


def test_every_violation_is_reported():
    # two separation failures and a diagonal entry in one table
    rep = validate_axioms([[1, 0, 0], [0, 0, 0], [0, 0, 0]], ["a", "b", "c"])
    assert len(rep.by_axiom("separation")) >= 2
    assert rep.by_axiom("zero-diagonal")


def test_dimension_mismatch_is_structural():
    with pytest.raises(StructureError):
        validate_axioms([[0, 1], [1, 0]], ["a", "b", "c"])
    with pytest.raises(StructureError):
        validate_axioms([[0, 1], [1]], ["a", "b"])


def test_conjugate_of_upper_is_lower(upper01):
    c = conjugate(upper01)
    assert c.d("0", "1") == 0 and c.d("1", "0") == 1
    assert conjugate(c) == upper01


def test_conjugate_fixes_symmetric(disc3):
    assert conjugate(disc3) == disc3


def test_sup_metric_of_upper(upper01):
    s = sup_metric(upper01)
    assert s.d("0", "1") == 1 == s.d("1", "0")
    assert sup_metric(sup_metric(upper01)) == s


def test_sup_metric_random_five_points():
    rng = random.Random(5)
    for _ in range(50):
        S = random_space(rng, 5)
        s = sup_metric(S)
        assert s.validate().valid
        assert all(s.table[i][j] == s.table[j][i] for i in range(len(s)) for j in range(len(s)))


def test_ball_on_sorgenfrey_truncation():
    Z = zoo_get("sorgenfrey")
    S = restrict(Z, [from_value(F(0)), from_value(F(1) / 2), from_value(F(3) / 4)])
    assert ball(S, "1/2", F(1, 3)) == {"1/2", "3/4"}


def test_ball_on_upper(upper01):
    assert ball(upper01, "1", F(1, 2)) == {"0", "1"}
    assert ball(upper01, "0", F(1, 2)) == {"0"}
    assert ball(upper01, "0", F(1, 2), "backward") == {"0", "1"}


def test_ball_rejects_bad_input(upper01):
    with pytest.raises(UnknownPointError):
        ball(upper01, "7", F(1))
    with pytest.raises(ValueError):
        ball(upper01, "0", F(0))


def test_t1_examples(upper01, disc3):
    assert not is_T1(upper01)
    assert is_T1(disc3)
    assert is_T1(restrict(zoo_get("sorgenfrey"), zoo_get("sorgenfrey").prefix(12)))


def test_triangle_closure_example():
    m = triangle_closure([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert m[0][2] == 2 and m[2][0] == 2


def test_triangle_closure_fixes_valid_tables(disc3):
    assert triangle_closure(disc3.table) == [list(r) for r in disc3.table]


def test_triangle_closure_rejects_negative():
    with pytest.raises(ValueError):
        triangle_closure([[0, -1], [1, 0]])


def test_quotient_examples():
    S = separation_quotient([[0, 0], [0, 0]], ["a", "b"])
    assert S.points == ("a+b",) and len(S) == 1
    T = separation_quotient([[0, 1], [2, 0]], ["a", "b"])
    assert T.points == ("a", "b")


def test_quotient_of_random_eight_point_tables():
    rng = random.Random(8)
    for _ in range(200):
        raw = random_raw_table(rng, 8, q=3)
        S = separation_quotient(triangle_closure(raw), [f"p{i}" for i in range(8)])
        assert S.validate().valid


def test_non_t1_generator():
    rng = random.Random(0)
    for _ in range(20):
        assert not is_T1(random_non_t1_space(rng, 4))


tables = st.integers(2, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150, deadline=None)
@given(tables)
def test_closure_properties(raw):
    n = len(raw)
    for i in range(n):
        raw[i][i] = 0
    m = triangle_closure(raw)
    assert triangle_closure(m) == m
    assert all(m[i][j] <= raw[i][j] for i in range(n) for j in range(n))
    assert all(m[i][i] == 0 for i in range(n))
    S = separation_quotient(m, [f"p{i}" for i in range(n)])
    assert S.validate().valid
    assert conjugate(conjugate(S)) == S
    s = sup_metric(S)
    assert s == sup_metric(conjugate(S))
    assert all(s.table[i][j] >= S.table[i][j] for i in range(len(S)) for j in range(len(S)))
    assert is_T1(S) == all(S.table[i][j] > 0 for i in range(len(S)) for j in range(len(S)) if i != j)


@settings(max_examples=100, deadline=None)
@given(tables, st.integers(1, 6), st.integers(1, 6))
def test_balls_grow_with_radius(raw, a, b):
    n = len(raw)
    for i in range(n):
        raw[i][i] = 0
    S = separation_quotient(triangle_closure(raw), [f"p{i}" for i in range(n)])
    lo, hi = sorted((Fraction(a, 2), Fraction(b, 2)))
    for x in S.points:
        for w in ("forward", "backward"):
            assert x in ball(S, x, lo, w)
            assert ball(S, x, lo, w) <= ball(S, x, hi, w)


def test_discrete_metric_labels():
    D = discrete_metric(["x", "y"])
    assert D.d("x", "y") == 1 and D.validate().valid
    with pytest.raises(StructureError):
        FiniteSpace(("x", "x"), [[0, 1], [1, 0]])
