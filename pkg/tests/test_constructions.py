import random
from fractions import Fraction

from quasiuc.constructions import backward_topologies_agree, distance_from_set, rho_construct
from quasiuc.space import FiniteSpace, discrete_metric, is_T1, random_non_t1_space, random_t1_space
from quasiuc.topology import min_neighborhood


def test_t1_input_gives_discrete_metric():
    rng = random.Random(0)
    for _ in range(30):
        S = random_t1_space(rng, rng.randint(1, 7))
        r = rho_construct(S)
        assert r.discrete and not r.xprime
        assert r.space == discrete_metric(S.points)


def test_entangled_space_by_formula(ent3):
    r = rho_construct(ent3)
    assert r.xprime == {"c", "d"}
    # d(X', c) = d(X', d) = 0 and d(X', z) = 0, so rho = d off the diagonal
    gap = {x: distance_from_set(ent3, r.xprime, x) for x in ent3.points}
    assert gap == {"c": 0, "d": 0, "z": 0}
    for x in ent3.points:
        for y in ent3.points:
            want = 0 if x == y else ent3.d(x, y) + max(gap[x], gap[y])
            assert r.space.d(x, y) == want
    assert not r.report.by_axiom("triangle")


def test_positive_gap_is_added():
    # X' = {a} (d(a,c) = 0); b and c are isolated with d(a,b) = 1/2, d(a,c) = 0
    h = Fraction(1, 2)
    S = FiniteSpace(("a", "b", "c"), [[0, h, 0], [1, 0, 1], [h, h, 0]])
    assert S.validate().valid
    r = rho_construct(S)
    assert r.xprime == {"a"}
    assert [r.space.d("a", "b"), r.space.d("b", "a"), r.space.d("b", "c")] == [1, Fraction(3, 2), Fraction(3, 2)]
    assert [r.space.d("a", "c"), r.space.d("c", "a"), r.space.d("c", "b")] == [0, h, 1]
    assert r.report.valid


def test_rho_dominates_and_keeps_triangle():
    rng = random.Random(1)
    for _ in range(200):
        S = random_non_t1_space(rng, rng.randint(2, 8))
        r = rho_construct(S)
        n = len(S)
        assert all(r.table[i][j] >= S.table[i][j] for i in range(n) for j in range(n))
        assert not r.report.by_axiom("triangle") and not r.report.by_axiom("nonnegativity")
        assert len(r.warnings) == len(r.separation_failures)


def test_separation_failures_are_flagged_not_hidden():
    # an invalid input (force-loaded) shows that the flag carries through
    S = FiniteSpace(("a", "b"), [[0, 0], [0, 0]])
    r = rho_construct(S)
    assert r.separation_failures == (("a", "b"),)
    assert r.warnings == ["separation fails for a and b"]


def test_forward_topology_kept_on_t1_inputs():
    rng = random.Random(2)
    for _ in range(30):
        S = random_t1_space(rng, rng.randint(2, 6))
        R = rho_construct(S).space
        assert all(min_neighborhood(S, x) == min_neighborhood(R, x) for x in S.points)
        assert is_T1(R)


def test_backward_topologies_compared(ent3):
    assert backward_topologies_agree(ent3, rho_construct(ent3).space)
    other = FiniteSpace(("c", "d", "z"), [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert not backward_topologies_agree(ent3, other)
