import random
from fractions import Fraction

import pytest

from quasiuc.points import from_value, nat, recip, zero
from quasiuc.sequences import Outcome
from quasiuc.zoo import MUTATIONS, CarrierError, build_catalog, restrict, truncation, zoo_get, zoo_ids

IDS = zoo_ids()


def claim_params():
    return [pytest.param(sid, c.id, id=c.id) for sid in IDS for c in zoo_get(sid).claims]


def test_catalog_ids():
    assert set(IDS) == {
        "upper", "lower", "sorgenfrey", "recip-conj-sorgenfrey", "non-normal-uc", "ab-parallel",
        "isolation-counterexample", "metrizable-nat", "one-vs-recip", "sum-through-zero",
    }
    with pytest.raises(KeyError):
        zoo_get("nope")


def test_distance_examples():
    S = zoo_get("sorgenfrey")
    half = from_value(Fraction(1, 2))
    assert S.distance(zero(), half) == Fraction(1, 2)
    assert S.distance(half, zero()) == 1
    assert zoo_get("non-normal-uc").distance(recip(5), nat(7)) == Fraction(1, 7)
    assert zoo_get("sum-through-zero").distance(nat(2), nat(3)) == Fraction(7, 3)


def test_upper_and_lower_are_conjugate():
    U, L = zoo_get("upper"), zoo_get("lower")
    pts = U.prefix(25)
    assert all(U.distance(x, y) == L.distance(y, x) for x in pts for y in pts)


def test_carrier_is_enforced():
    with pytest.raises(CarrierError):
        zoo_get("one-vs-recip").canonical(nat(2))
    with pytest.raises(CarrierError):
        restrict(zoo_get("non-normal-uc"), [recip(2), zero()])


def test_cases_follow_tags():
    Z = zoo_get("non-normal-uc")
    assert Z.case_of(recip(3), nat(1)) == "recip-to-nat"
    assert Z.case_of(nat(1), recip(3)) == "otherwise"
    assert Z.case_of(recip(2), recip(3)) == "recip-recip-down"


@pytest.mark.parametrize("sid", IDS)
def test_random_truncations_validate(sid):
    Z = zoo_get(sid)
    rng = random.Random(f"zoo:{sid}")
    for _ in range(200):
        S = restrict(Z, Z.sample(rng, rng.randint(2, 12)))
        rep = S.validate()
        assert rep.valid, str(rep)


@pytest.mark.parametrize("sid", IDS)
def test_emit_truncation(sid):
    S = truncation(zoo_get(sid), 10)
    assert len(S) == 10 and S.validate().valid


_CAT = build_catalog()
_VERDICTS: dict = {}


def _verdict(sid, cid):
    if cid not in _VERDICTS:
        _VERDICTS[cid] = zoo_get(sid).claim(cid).execute(_CAT)
    return _VERDICTS[cid]


@pytest.mark.parametrize("sid, cid", claim_params())
def test_claim_matches(sid, cid):
    claim = zoo_get(sid).claim(cid)
    v = _verdict(sid, cid)
    assert v.outcome.value == claim.expect, str(v)


# claims whose check runs in another catalog space
_RUNS_IN = {"M2": "sorgenfrey"}


def test_failure_witnesses_replay():
    replayed = 0
    for sid in IDS:
        for c in zoo_get(sid).claims:
            v = _verdict(sid, c.id)
            w = v.witness
            if not v.fails or w is None or len(w.points) != 2 or not w.relation.startswith("distance"):
                continue
            Z = zoo_get(_RUNS_IN.get(c.id, sid))
            x, y = (Z.parse_point(p) for p in w.points)
            assert Z.distance(x, y) == w.value, c.id
            if w.relation == "distance>=eps":
                assert w.value >= w.eps, c.id
            replayed += 1
    assert replayed >= 5


def test_small_horizon_gives_unknown_not_failure():
    cat = build_catalog()
    outs = [c.execute(cat, horizon=10).outcome for sid in IDS for c in zoo_get(sid).claims]
    assert Outcome.UNKNOWN in outs


def test_mutation_list_shape():
    assert len(MUTATIONS) >= 20
    assert len({m.id for m in MUTATIONS}) == len(MUTATIONS)
    assert any(m.claim for m in MUTATIONS) and any(m.case for m in MUTATIONS)


def test_mutated_catalog_differs_only_where_asked():
    m = next(x for x in MUTATIONS if x.case)
    cat = build_catalog([m])
    base = build_catalog()
    for sid in IDS:
        if sid != m.space:
            Z0, Z1 = base[sid], cat[sid]
            pts = Z0.prefix(8)
            assert all(Z0.distance(x, y) == Z1.distance(x, y) for x in pts for y in pts)
