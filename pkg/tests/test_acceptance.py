"""Acceptance criteria, one test each.  Each test records a PASS/FAIL line
that is printed in the terminal summary; tolerances are exact equality
unless a horizon or time budget is stated."""

import json
import subprocess
import sys
import time

from quasiuc.harness import (
    run_finite_suite,
    run_lebesgue_exactness,
    run_mutation_suite,
    run_oracle_suite,
    run_rho_suite,
    run_zoo_suite,
)
from quasiuc.io import dumps
from quasiuc.zoo import MUTATIONS


# claim ids for each item named in the zoo-regression criterion
NAMED_CLAIMS = {
    "S1": "Sorgenfrey: 1/n forward converges to 0 with modulus",
    "S2": "Sorgenfrey: 1/n not backward convergent, witness distance 1",
    "S3": "Sorgenfrey: 1/n not left K-Cauchy, witness eps 1/2",
    "S4": "Sorgenfrey: -1/n left K-Cauchy with modulus",
    "U1": "upper: n+1 forward parallel to n",
    "U2": "upper: n+1 not backward parallel to n",
    "N1": "non-normal-uc: n forward converges to 1/m, m = 2..50",
    "N2": "non-normal-uc: 1/n left K-Cauchy",
    "N4": "non-normal-uc: d(A,B) bound <= 1/10^6 at 1000 terms",
    "I1": "isolation-counterexample: I+(n) = 0 exactly, n = 1..50",
    "R1": "conjugate Sorgenfrey on {1/n} with 0: witness with eps 1 holds",
    "O1": "one-vs-recip: witness for f = 1/x holds",
    "Z1": "sum-through-zero: witness for f = 1/x holds",
}


def test_criterion_1_zoo_regression(acceptance):
    rep = run_zoo_suite()
    claims = {c.id: c for c in rep.checks if c.state != "metadata"}
    bad = [cid for cid, c in claims.items() if c.state != "match"]
    missing = [cid for cid in NAMED_CLAIMS if cid not in claims]
    v = {cid: claims[cid].detail["verdict"] for cid in ("S2", "S3", "N4") if cid in claims}
    specifics = (
        v["S2"]["witness"]["value"] == "1"
        and v["S3"]["witness"]["eps"] == "1/2"
        and v["N4"]["horizon"] == 1000
        and v["N4"]["basis"] == "horizon"
    )
    ok = not bad and not missing and specifics
    acceptance(1, ok, f"{len(claims)} executable claims, {len(claims) - len(bad)} match; non-matching {bad or 'none'}; named items present {not missing}")
    assert not missing
    assert not bad, bad
    assert specifics


def test_criterion_2_finite_suite(acceptance):
    t0 = time.perf_counter()
    rep = run_finite_suite(seed=1, trials=1000, max_size=10, min_size=2)
    elapsed = time.perf_counter() - t0
    failed = [c.id for c in rep.failures]
    ok = not failed and elapsed < 60
    acceptance(2, ok, f"1000 trials, sizes 2-10, {len(rep.checks)} checks, failures {failed or 'none'}, {elapsed:.1f} s (budget 60 s)")
    assert not failed, rep.text()
    assert elapsed < 60


def test_criterion_3_oracle_equivalence(acceptance):
    rep = run_oracle_suite(seed=1, normal_trials=500, cluster_trials=500)
    n = {c.id: c for c in rep.checks}
    ok = rep.ok and n["oracle-normality"].runs == 500 and n["oracle-cluster"].runs == 500
    acceptance(3, ok, f"normality {n['oracle-normality'].failures}/500 disagreements, cluster points {n['oracle-cluster'].failures}/500 disagreements")
    assert ok, rep.text()


def test_criterion_4_lebesgue_exactness(acceptance):
    rep = run_lebesgue_exactness(seed=1, trials=200)
    c = rep.checks[0]
    acceptance(4, rep.ok, f"{c.failures}/200 contract violations ({c.detail['finite_delta_star']} covers with finite delta_star)")
    assert rep.ok, rep.text()


def test_criterion_5_rho(acceptance):
    rep = run_rho_suite(seed=1, t1_trials=500, non_t1_trials=200)
    c = {x.id: x for x in rep.checks}
    acceptance(
        5,
        rep.ok,
        f"T1 {c['rho-sweep-t1'].failures}/500 failures, non-T1 {c['rho-sweep-non-t1'].failures}/200 failures, "
        f"separation failures flagged {c['rho-sweep-non-t1'].detail['separation_failures_flagged']}",
    )
    assert rep.ok, rep.text()


def test_criterion_6_mutations(acceptance):
    rep = run_mutation_suite(MUTATIONS)
    missed = [c.id for c in rep.checks if not c.detail["caught_by"]]
    ok = len(MUTATIONS) >= 20 and not missed
    acceptance(6, ok, f"{len(MUTATIONS) - len(missed)}/{len(MUTATIONS)} mutations caught; missed {missed or 'none'}")
    assert len(MUTATIONS) >= 20
    assert not missed


def _suite_body(seed: int) -> tuple[int, str]:
    res = subprocess.run(
        [sys.executable, "-m", "quasiuc", "suite", "--seed", str(seed), "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    doc = json.loads(res.stdout)
    return res.returncode, dumps(doc["body"])


def test_criterion_7_determinism(acceptance):
    code_a, a = _suite_body(7)
    code_b, b = _suite_body(7)
    same = a == b
    acceptance(7, same and code_a == code_b == 0, f"two runs of 'suite --seed 7': bodies identical {same}, {len(a)} bytes, exit codes {code_a}/{code_b}")
    assert same
    assert code_a == code_b == 0
