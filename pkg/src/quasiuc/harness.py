"""Property suites over random finite spaces and the zoo claim catalog.

Each finite trial draws its own generator from ``random.Random(f"{seed}:{t}")``
so trials are independent and may run in worker processes; results are
merged in trial order and checks are reported sorted by id.  Report
bodies contain no timing, which lives in a separate section.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import oracles
from .constructions import backward_topologies_agree, rho_construct
from .functionals import discreteness_gap, isolation, set_distance, Explicit
from .io import dumps, space_to_json
from .rational import INF, fmt
from .realfunctions import TableFn, uc_modulus_finite
from .sequences import DEFAULT_EPS_GRID, DEFAULT_HORIZON, FromList, check_convergence, check_cauchy, cluster_points_finite
from .space import (
    FiniteSpace,
    conjugate,
    is_T1,
    random_raw_table,
    random_non_t1_space,
    random_t1_space,
    separation_quotient,
    sup_metric,
    triangle_closure,
)
from .topology import (
    Cover,
    closure,
    is_normal,
    isolated_points,
    lebesgue_number,
    min_neighborhood,
    topology_included,
)
from .zoo import MUTATIONS, Mutation, build_catalog

__all__ = [
    "CheckResult",
    "SuiteReport",
    "FINITE_CHECKS",
    "run_finite_suite",
    "run_zoo_suite",
    "run_mutation_suite",
    "run_oracle_suite",
    "run_lebesgue_exactness",
    "run_rho_suite",
    "run_full_suite",
    "write_artifacts",
    "random_cover",
    "random_fn",
    "random_periodic",
    "lebesgue_exact",
]


@dataclass
class CheckResult:
    id: str
    about: str
    runs: int = 0
    failures: int = 0
    status: Optional[str] = None  # overrides the pass/fail summary (zoo statuses)
    detail: dict = field(default_factory=dict)
    artifact: Optional[dict] = None

    @property
    def state(self) -> str:
        if self.status is not None:
            return self.status
        return "fail" if self.failures else "pass"

    @property
    def failed(self) -> bool:
        return self.state in ("fail", "mismatch", "broken-certificate")

    def to_json(self) -> dict:
        out = {"id": self.id, "about": self.about, "status": self.state, "runs": self.runs, "failures": self.failures}
        if self.detail:
            out["detail"] = self.detail
        if self.artifact is not None:
            out["artifact"] = self.artifact
        return out


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list
    timing: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def totals(self) -> dict:
        counts: dict = {}
        for c in self.checks:
            counts[c.state] = counts.get(c.state, 0) + 1
        return dict(sorted(counts.items()))

    def body(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.id)],
            "totals": self.totals(),
            "ok": self.ok,
        }

    def to_json(self) -> dict:
        return {"body": self.body(), "timing": self.timing}

    def body_text(self) -> str:
        return dumps(self.body())

    def text(self) -> str:
        lines = [f"suite {self.suite}  " + "  ".join(f"{k}={v}" for k, v in self.params.items())]
        for c in sorted(self.checks, key=lambda c: c.id):
            extra = f"  {c.failures}/{c.runs} failed" if c.failures else (f"  {c.runs} runs" if c.runs else "")
            lines.append(f"  [{c.state:>18}] {c.id}: {c.about}{extra}")
            if c.failed and c.artifact:
                lines.append(f"      artifact: {c.artifact.get('summary', '')}")
        lines.append("totals: " + ", ".join(f"{k}={v}" for k, v in self.totals().items()))
        return "\n".join(lines)


def merge_reports(name: str, reports: Iterable[SuiteReport]) -> SuiteReport:
    reports = list(reports)
    params = {r.suite: r.params for r in reports}
    checks = [c for r in reports for c in r.checks]
    timing = {r.suite: r.timing for r in reports}
    return SuiteReport(name, params, checks, timing)


# -- random helpers ---------------------------------------------------------------------


def random_cover(rng: random.Random, S: FiniteSpace) -> Cover:
    """Unions of minimal neighbourhoods, open by construction, padded with extra opens."""
    pts = list(S.points)
    members = []
    uncovered = set(pts)
    while uncovered:
        seed_pt = rng.choice(sorted(uncovered, key=S.index))
        extra = rng.sample(pts, rng.randint(0, max(0, len(pts) // 3)))
        m = frozenset().union(*(min_neighborhood(S, x) for x in [seed_pt] + extra))
        members.append(m)
        uncovered -= m
    for _ in range(rng.randint(0, 2)):
        extra = rng.sample(pts, rng.randint(1, len(pts)))
        members.append(frozenset().union(*(min_neighborhood(S, x) for x in extra)))
    return Cover.of(members)


def random_fn(rng: random.Random, S: FiniteSpace, q: int = 4) -> TableFn:
    return TableFn.of({p: Fraction(rng.randint(-q, q), rng.randint(1, q)) for p in S.points})


def random_continuous_fn(rng: random.Random, S: FiniteSpace) -> TableFn:
    """Constant on each specialisation class reachable by zero distances."""
    vals: dict = {}
    for x in sorted(S.points, key=lambda p: len(min_neighborhood(S, p)), reverse=True):
        nb = min_neighborhood(S, x)
        fixed = [vals[y] for y in nb if y in vals]
        v = fixed[0] if fixed else Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        for y in nb:
            vals.setdefault(y, v)
    return TableFn.of(vals)


def random_periodic(rng: random.Random, S: FiniteSpace) -> FromList:
    pts = list(S.points)
    prefix = tuple(rng.choice(pts) for _ in range(rng.randint(0, 3)))
    period = tuple(rng.choice(pts) for _ in range(rng.randint(1, 3)))
    return FromList(prefix, period)


def random_subsets(rng: random.Random, S: FiniteSpace, exhaustive_upto: int = 7, samples: int = 48):
    pts = list(S.points)
    if len(pts) <= exhaustive_upto:
        for r in range(len(pts) + 1):
            yield from (frozenset(c) for c in itertools.combinations(pts, r))
        return
    yield frozenset()
    yield frozenset(pts)
    for _ in range(samples):
        yield frozenset(p for p in pts if rng.random() < 0.5)


def lebesgue_exact(S: FiniteSpace, cover: Cover) -> Optional[str]:
    """None if delta_star meets its contract, else a description of the breach."""
    res = lebesgue_number(S, cover)
    members = cover.members
    if res.delta_star == INF:
        return None if oracles.lebesgue_holds_at(S, members, INF) else "ball condition fails at delta=inf"
    if res.delta_star > 0 and not oracles.lebesgue_holds_at(S, members, res.delta_star):
        return f"ball condition fails at delta_star={fmt(res.delta_star)}"
    bigger = [v for v in S.distinct_values() if v > res.delta_star]
    if bigger and oracles.lebesgue_holds_at(S, members, bigger[0]):
        return f"ball condition still holds at {fmt(bigger[0])} > delta_star={fmt(res.delta_star)}"
    if not bigger and res.delta_star != INF and oracles.lebesgue_holds_at(S, members, INF):
        return "ball condition holds for every radius but delta_star is finite"
    return None


# -- finite suite -------------------------------------------------------------------------

FINITE_CHECKS = {
    "closure-kuratowski": "closure is a Kuratowski closure operator and matches the closed-set oracle",
    "closed-sets-apart": "disjoint closed sets have positive set distance",
    "cluster-oracle": "cluster points of periodic sequences match the definition",
    "cluster-convergence": "left K-Cauchy with a cluster point implies convergence (periodic)",
    "conjugate-involution": "conjugate is an involution and stays valid",
    "discreteness-gap": "every subset of a T1 space has a positive discreteness gap",
    "generator-valid": "random nonneg table -> closure -> quotient validates",
    "isolation": "isolation is positive exactly at isolated points and matches the ball oracle",
    "lebesgue-contract": "delta_star passes the ball test and the next table value fails",
    "lebesgue-positive": "every open cover of a T1 space has delta_star > 0",
    "normality-oracle": "pair criterion agrees with brute-force separation (size <= 8)",
    "rho-non-t1": "rho keeps triangle, nonnegativity and zero diagonal; separation failures flagged",
    "rho-t1": "rho on a T1 space validates, is T1 and dominates d",
    "sup-metric": "associated metric is a symmetric valid metric dominating d and its conjugate",
    "t1-criterion": "T1 iff every off-diagonal entry is positive iff every singleton is closed",
    "topology-inclusion": "inclusion test agrees with full open-set enumeration (size <= 6)",
    "triangle-closure": "min-plus closure is idempotent, below its input and matches relaxation",
    "uc-modulus": "forward continuous table functions on T1 spaces have a working modulus",
    "validator-idempotent": "validation is stable under re-validation and closure",
}


def _trial(args) -> list[tuple[str, Optional[str], Optional[dict]]]:
    """One trial; returns (check id, failure message or None, artifact)."""
    seed, t, min_size, max_size = args
    rng = random.Random(f"{seed}:{t}")
    size = rng.randint(min_size, max_size)
    out: list = []

    def rec(cid, failure=None, S=None, **extra):
        art = None
        if failure is not None:
            art = {"trial": t, "summary": failure}
            if S is not None:
                art["space"] = space_to_json(S)
            art.update({k: (fmt(v) if isinstance(v, Fraction) else v) for k, v in extra.items()})
        out.append((cid, failure, art))

    raw = random_raw_table(rng, size)
    closed = triangle_closure(raw)
    S = separation_quotient(closed, [f"p{i}" for i in range(size)], name=f"trial-{t}")
    T = random_t1_space(rng, size)
    spaces = (S, T)

    # generator and validator
    rep = S.validate()
    rec("generator-valid", None if rep.valid else str(rep), S)
    again = FiniteSpace(S.points, triangle_closure(S.table)).validate()
    rec("validator-idempotent", None if rep == S.validate() == again and again.valid else "validation changed", S)

    # closure
    fix = oracles.shortest_paths_fixpoint(raw)
    msg = None
    if closed != fix:
        msg = "closure differs from relaxation fixpoint"
    elif triangle_closure(closed) != closed:
        msg = "closure not idempotent"
    elif any(closed[i][j] > raw[i][j] for i in range(size) for j in range(size)):
        msg = "closure increased an entry"
    rec("triangle-closure", msg)

    for X in spaces:
        c = conjugate(X)
        rec("conjugate-involution", None if conjugate(c) == X and c.validate().valid else "conjugate broke", X)
        s = sup_metric(X)
        n = len(X)
        ok = (
            s.validate().valid
            and all(s.table[i][j] == s.table[j][i] for i in range(n) for j in range(n))
            and s == sup_metric(c)
            and all(s.table[i][j] >= X.table[i][j] for i in range(n) for j in range(n))
        )
        rec("sup-metric", None if ok else "associated metric broke", X)
        singletons_closed = all(closure(X, [x]) == {x} for x in X.points)
        positive = all(X.table[i][j] > 0 for i in range(n) for j in range(n) if i != j)
        rec("t1-criterion", None if is_T1(X) == singletons_closed == positive else "T1 test disagrees with closed singletons", X)

        # closure operator
        subs = list(random_subsets(rng, X, exhaustive_upto=6, samples=24))
        msg = None
        if closure(X, []) != frozenset():
            msg = "closure of empty set is not empty"
        for A in subs:
            cA = closure(X, A)
            if not A <= cA or closure(X, cA) != cA:
                msg = f"closure not extensive/idempotent on {sorted(A)}"
                break
        if msg is None:
            for A, B in zip(subs, reversed(subs)):
                if closure(X, A | B) != closure(X, A) | closure(X, B):
                    msg = f"closure not additive on {sorted(A)}, {sorted(B)}"
                    break
        if msg is None and n <= 6:
            for A in subs[:16]:
                if closure(X, A) != oracles.closure_bruteforce(X, A):
                    msg = f"closure differs from oracle on {sorted(A)}"
                    break
        rec("closure-kuratowski", msg, X)

        # isolation
        msg = None
        iso = isolated_points(X)
        if n >= 2:
            for x in X.points:
                v = isolation(X, x).value
                if (v > 0) != (x in iso) or v != oracles.isolation_bruteforce(X, x):
                    msg = f"isolation mismatch at {x}: {fmt(v)}"
                    break
        rec("isolation", msg, X)

        # disjoint closed sets
        msg = None
        closed_subsets = [A for A in subs if A and closure(X, A) == A]
        for A, B in itertools.combinations(closed_subsets[:20], 2):
            if A.isdisjoint(B):
                v = set_distance(X, Explicit(tuple(sorted(A))), Explicit(tuple(sorted(B)))).value
                if not v > 0:
                    msg = f"d({sorted(A)}, {sorted(B)}) = {fmt(v)}"
                    break
        rec("closed-sets-apart", msg, X)

        # Lebesgue contract on arbitrary covers
        cov = random_cover(rng, X)
        breach = lebesgue_exact(X, cov)
        rec("lebesgue-contract", breach, X, cover=cov.to_json())

        # normality
        if n <= 8:
            fast, slow = is_normal(X).normal, oracles.is_normal_bruteforce(X)
            rec("normality-oracle", None if fast == slow else f"criterion {fast}, brute force {slow}", X)

        if n <= 6:
            ok = True
            for a, b in (("forward", "backward"), ("backward", "forward")):
                inner, outer = set(oracles.open_sets(X, a)), set(oracles.open_sets(X, b))
                if topology_included(X, a, b) != (inner <= outer):
                    ok = False
            rec("topology-inclusion", None if ok else "inclusion test disagrees with enumeration", X)

            seq = random_periodic(rng, X)
            fast = cluster_points_finite(X, seq)
            slow = oracles.cluster_points_bruteforce(X, seq.prefix, seq.period)
            rec("cluster-oracle", None if fast == slow else f"cluster {sorted(fast)} vs {sorted(slow)}", X, sequence=repr(seq))
            msg = None
            if check_cauchy(X, seq, "leftK").holds:
                for x in sorted(fast):
                    if not check_convergence(X, seq, x).holds:
                        msg = f"left K-Cauchy sequence clusters at {x} without converging"
            rec("cluster-convergence", msg, X, sequence=repr(seq))

    # T1-only properties
    cov = random_cover(rng, T)
    res = lebesgue_number(T, cov)
    rec("lebesgue-positive", None if res.delta_star > 0 else "delta_star = 0 on a T1 space", T, cover=cov.to_json())

    f = random_fn(rng, T)
    m = uc_modulus_finite(T, f)
    msg = None
    if not m.ok:
        msg = "modulus refused on a T1 space"
    else:
        gaps = sorted({g for _, g in m.pairs if g > 0})
        for e in gaps:
            delta = m.delta(e)
            if not delta > 0:
                msg = f"delta({fmt(e)}) = {fmt(delta)}"
                break
            for x in T.points:
                for y in T.points:
                    if T.d(x, y) < delta and abs(f(x) - f(y)) >= e:
                        msg = f"delta({fmt(e)}) = {fmt(delta)} fails at ({x}, {y})"
    rec("uc-modulus", msg, T, fn=repr(f))

    msg = None
    for A in random_subsets(rng, T):
        if len(A) >= 2:
            g = discreteness_gap(T, sorted(A)).value
            brute = min(T.d(x, y) for x in A for y in A if x != y)
            if not g > 0 or g != brute:
                msg = f"gap {fmt(g)} on {sorted(A)}"
                break
    rec("discreteness-gap", msg, T)

    # rho construction
    r = rho_construct(T)
    n = len(T)
    ok = r.report.valid and is_T1(r.space) and all(r.table[i][j] >= T.table[i][j] for i in range(n) for j in range(n))
    rec("rho-t1", None if ok else "rho on T1 input broke", T)
    r = rho_construct(S)
    bad = [v for v in r.report.violations if v.axiom != "separation"]
    brute_sep = {
        (a, b)
        for i, a in enumerate(S.points)
        for j, b in enumerate(S.points)
        if i < j and r.table[i][j] == 0 and r.table[j][i] == 0
    }
    ok = not bad and set(r.separation_failures) == brute_sep and len(r.warnings) == len(brute_sep)
    rec("rho-non-t1", None if ok else f"rho violations {[str(v) for v in bad]}", S)
    return out


def run_finite_suite(seed: int = 1, trials: int = 100, max_size: int = 8, min_size: int = 2, jobs: int = 1) -> SuiteReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= min_size <= max_size:
        raise ValueError("need 1 <= min_size <= max_size")
    t0 = time.perf_counter()
    args = [(seed, t, min_size, max_size) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_trial, args, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_trial(a) for a in args]
    checks = {cid: CheckResult(cid, about) for cid, about in FINITE_CHECKS.items()}
    for trial in results:
        for cid, failure, art in trial:
            c = checks[cid]
            c.runs += 1
            if failure is not None:
                c.failures += 1
                if c.artifact is None:
                    c.artifact = art
    params = {"seed": seed, "trials": trials, "min_size": min_size, "max_size": max_size}
    return SuiteReport("finite", params, list(checks.values()), {"seconds": round(time.perf_counter() - t0, 3)})


# -- zoo suite ----------------------------------------------------------------------------


def _status(expect: str, verdict) -> str:
    if verdict.unknown:
        return "broken-certificate" if verdict.note == "certificate contradicted" else "skipped"
    return "match" if verdict.outcome.value == expect else "mismatch"


def run_zoo_suite(
    horizon: Optional[int] = None,
    eps=DEFAULT_EPS_GRID,
    mutations: Iterable[Mutation] = (),
    ids: Optional[Iterable[str]] = None,
) -> SuiteReport:
    """Execute every claim (or those on the spaces in ``ids``)."""
    t0 = time.perf_counter()
    mutations = tuple(mutations)
    cat = build_catalog(mutations)
    wanted = list(cat) if ids is None else list(ids)
    for sid in wanted:
        if sid not in cat:
            raise KeyError(f"unknown zoo space {sid!r}")
    checks, timing = [], {}
    for sid in wanted:
        space = cat[sid]
        for claim in space.claims:
            t1 = time.perf_counter()
            v = claim.execute(cat, horizon, eps)
            timing[claim.id] = round(time.perf_counter() - t1, 4)
            st = _status(claim.expect, v)
            c = CheckResult(
                claim.id,
                f"[{sid}] {claim.statement}",
                1,
                int(st in ("mismatch", "broken-certificate")),
                st,
                {"expect": claim.expect, "verdict": v.to_json()},
            )
            if c.failed:
                c.artifact = {"summary": f"expected {claim.expect}, got {v}", "space": sid}
            checks.append(c)
        for i, meta in enumerate(space.metadata):
            checks.append(CheckResult(f"{sid}/meta{i + 1}", f"[{sid}] {meta}", 0, 0, "metadata"))
    params = {
        "horizon": horizon or DEFAULT_HORIZON,
        "eps_grid": eps if isinstance(eps, int) else [fmt(e) for e in eps],
        "mutations": [m.id for m in mutations],
    }
    timing["seconds"] = round(time.perf_counter() - t0, 3)
    return SuiteReport("zoo", params, checks, timing)


def run_mutation_suite(mutations: Iterable[Mutation] = MUTATIONS, horizon: Optional[int] = None, eps=DEFAULT_EPS_GRID) -> SuiteReport:
    """Each mutation must make at least one claim on its space fail."""
    t0 = time.perf_counter()
    checks = []
    for m in mutations:
        rep = run_zoo_suite(horizon, eps, (m,), ids=[m.space])
        caught = [c.id for c in rep.failures]
        checks.append(
            CheckResult(
                f"mutation:{m.id}",
                "mutation is detected by at least one claim",
                1,
                0 if caught else 1,
                "caught" if caught else "fail",
                {"caught_by": caught},
            )
        )
    return SuiteReport("mutation", {"count": len(checks)}, checks, {"seconds": round(time.perf_counter() - t0, 3)})


# -- oracle, Lebesgue and rho sweeps ------------------------------------------------


def _count(cid: str, about: str, failures: list, runs: int) -> CheckResult:
    c = CheckResult(cid, about, runs, len(failures))
    if failures:
        c.artifact = failures[0]
    return c


def _art(t: int, summary: str, S: FiniteSpace, **extra) -> dict:
    return {"trial": t, "summary": summary, "space": space_to_json(S), **extra}


def run_oracle_suite(seed: int = 1, normal_trials: int = 500, cluster_trials: int = 500) -> SuiteReport:
    """Fast criteria against brute-force open-set enumeration."""
    t0 = time.perf_counter()
    bad_normal, bad_cluster = [], []
    for t in range(normal_trials):
        rng = random.Random(f"{seed}:normal:{t}")
        S = random_raw_space(rng, rng.randint(2, 8))
        fast, slow = is_normal(S).normal, oracles.is_normal_bruteforce(S)
        if fast != slow:
            bad_normal.append(_art(t, f"criterion {fast}, brute force {slow}", S))
    for t in range(cluster_trials):
        rng = random.Random(f"{seed}:cluster:{t}")
        S = random_raw_space(rng, rng.randint(1, 6))
        seq = random_periodic(rng, S)
        fast = cluster_points_finite(S, seq)
        slow = oracles.cluster_points_bruteforce(S, seq.prefix, seq.period)
        if fast != slow:
            bad_cluster.append(_art(t, f"{sorted(fast)} vs {sorted(slow)}", S, sequence=repr(seq)))
    checks = [
        _count("oracle-normality", "pair criterion vs brute-force separation", bad_normal, normal_trials),
        _count("oracle-cluster", "cluster points vs definition unfolding", bad_cluster, cluster_trials),
    ]
    params = {"seed": seed, "normal_trials": normal_trials, "cluster_trials": cluster_trials}
    return SuiteReport("oracle", params, checks, {"seconds": round(time.perf_counter() - t0, 3)})


def random_raw_space(rng: random.Random, size: int) -> FiniteSpace:
    """Mix of T1 and non-T1 spaces (zero entries are common at q=4)."""
    raw = random_raw_table(rng, size, q=rng.choice((2, 4, 8)))
    return separation_quotient(triangle_closure(raw), [f"p{i}" for i in range(size)], name="random")


def run_lebesgue_exactness(seed: int = 1, trials: int = 200, max_size: int = 10) -> SuiteReport:
    t0 = time.perf_counter()
    bad, finite = [], 0
    for t in range(trials):
        rng = random.Random(f"{seed}:lebesgue:{t}")
        S = random_t1_space(rng, rng.randint(2, max_size))
        cov = random_cover(rng, S)
        if lebesgue_number(S, cov).delta_star != INF:
            finite += 1
        breach = lebesgue_exact(S, cov)
        if breach is not None:
            bad.append(_art(t, breach, S, cover=cov.to_json()))
    checks = [_count("lebesgue-exact", "ball test passes at delta_star and fails at the next table value", bad, trials)]
    checks[0].detail = {"finite_delta_star": finite}
    params = {"seed": seed, "trials": trials, "max_size": max_size}
    return SuiteReport("lebesgue", params, checks, {"seconds": round(time.perf_counter() - t0, 3)})


def run_rho_suite(seed: int = 1, t1_trials: int = 500, non_t1_trials: int = 200, max_size: int = 10) -> SuiteReport:
    t0 = time.perf_counter()
    bad_t1, bad_non, flagged = [], [], 0
    for t in range(t1_trials):
        rng = random.Random(f"{seed}:rho-t1:{t}")
        S = random_t1_space(rng, rng.randint(1, max_size))
        r = rho_construct(S)
        n = len(S)
        if not r.report.valid:
            bad_t1.append(_art(t, f"rho invalid: {r.report}", S))
        elif not is_T1(r.space):
            bad_t1.append(_art(t, "rho is not T1", S))
        elif any(r.table[i][j] < S.table[i][j] for i in range(n) for j in range(n)):
            bad_t1.append(_art(t, "rho < d somewhere", S))
    for t in range(non_t1_trials):
        rng = random.Random(f"{seed}:rho-non-t1:{t}")
        S = random_non_t1_space(rng, rng.randint(2, max_size))
        r = rho_construct(S)
        n = len(S)
        tri = [
            (i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if r.table[i][k] > r.table[i][j] + r.table[j][k]
        ]
        neg = any(v < 0 for row in r.table for v in row)
        zero_pairs = {
            (S.points[i], S.points[j])
            for i in range(n)
            for j in range(i + 1, n)
            if r.table[i][j] == 0 and r.table[j][i] == 0
        }
        flagged += len(zero_pairs)
        if tri or neg:
            bad_non.append(_art(t, f"triangle breaches {tri[:3]}, negative {neg}", S))
        elif zero_pairs != set(r.separation_failures) or len(r.warnings) != len(zero_pairs):
            bad_non.append(_art(t, "separation failure not flagged", S))
    # Search for tau(conj d) != tau(conj rho); reported, never asserted either way.
    differ = []
    for t in range(non_t1_trials):
        rng = random.Random(f"{seed}:rho-tau:{t}")
        S = random_non_t1_space(rng, rng.randint(2, max_size))
        if not backward_topologies_agree(S, rho_construct(S).space):
            differ.append(_art(t, "backward topologies of d and rho differ", S))
    tau = CheckResult("rho-backward-topology", "search for spaces where conj d and conj rho give different topologies", non_t1_trials, 0, "info", {"found": len(differ)})
    if differ:
        tau.artifact = differ[0]
    checks = [
        tau,
        _count("rho-sweep-t1", "rho validates, dominates d and is T1", bad_t1, t1_trials),
        _count("rho-sweep-non-t1", "rho keeps triangle and nonnegativity; separation failures flagged", bad_non, non_t1_trials),
    ]
    checks[2].detail = {"separation_failures_flagged": flagged}
    params = {"seed": seed, "t1_trials": t1_trials, "non_t1_trials": non_t1_trials, "max_size": max_size}
    return SuiteReport("rho", params, checks, {"seconds": round(time.perf_counter() - t0, 3)})


def run_full_suite(seed: int = 1, trials: int = 100, max_size: int = 8, horizon: Optional[int] = None, eps=DEFAULT_EPS_GRID, jobs: int = 1, zoo: bool = True) -> SuiteReport:
    """Finite suite, the oracle sweeps at their default sizes, and the zoo claims."""
    parts = [
        run_finite_suite(seed, trials, max_size, jobs=jobs),
        run_oracle_suite(seed),
        run_lebesgue_exactness(seed),
        run_rho_suite(seed),
    ]
    if zoo:
        parts.append(run_zoo_suite(horizon, eps))
    return merge_reports("all", parts)


def write_artifacts(report: SuiteReport, directory) -> list:
    """Write the space and cover of each failed check so the CLI can replay them."""
    from pathlib import Path

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for c in report.failures:
        art = c.artifact or {}
        stem = c.id.replace("/", "_").replace(":", "_")
        if "space" in art and isinstance(art["space"], dict):
            p = out / f"{stem}.space.json"
            p.write_text(dumps(art["space"]), encoding="utf-8")
            written.append(p)
            if "cover" in art:
                q = out / f"{stem}.cover.json"
                q.write_text(dumps({"space": art["space"], "cover": art["cover"]}), encoding="utf-8")
                written.append(q)
        p = out / f"{stem}.json"
        p.write_text(dumps(c.to_json()), encoding="utf-8")
        written.append(p)
    return written
