"""Slow reference implementations used to cross-check the fast paths.

Nothing here uses minimal neighbourhoods: open sets are found by
unfolding "union of open balls" over every radius that matters, and
every other oracle builds on that enumeration or on direct definitions.
Exponential in the number of points; keep spaces small.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable

from .rational import INF
from .space import FiniteSpace, ball

__all__ = [
    "candidate_radii",
    "open_sets",
    "closed_sets",
    "closure_bruteforce",
    "is_normal_bruteforce",
    "cluster_points_bruteforce",
    "shortest_paths_fixpoint",
    "lebesgue_holds_at",
    "lebesgue_bruteforce",
    "isolation_bruteforce",
]


def candidate_radii(S: FiniteSpace) -> list[Fraction]:
    """Radii at which balls can change, plus one below every positive distance."""
    pos = sorted({v for row in S.table for v in row if v > 0})
    small = pos[0] / 2 if pos else Fraction(1)
    return [small] + pos + [(pos[-1] if pos else 0) + 1]


def _mask(S: FiniteSpace, pts: Iterable[str]) -> int:
    m = 0
    for p in pts:
        m |= 1 << S.index(p)
    return m


def _members(S: FiniteSpace, m: int) -> frozenset[str]:
    return frozenset(p for i, p in enumerate(S.points) if m >> i & 1)


def open_sets(S: FiniteSpace, which: str = "forward") -> list[int]:
    """Every open set as a bitmask: U is open iff each x in U has a ball inside U."""
    n = len(S)
    balls = [[_mask(S, ball(S, x, r, which)) for r in candidate_radii(S)] for x in S.points]
    out = []
    for U in range(1 << n):
        if all(any(b & ~U == 0 for b in balls[i]) for i in range(n) if U >> i & 1):
            out.append(U)
    return out


def closed_sets(S: FiniteSpace, which: str = "forward") -> list[int]:
    full = (1 << len(S)) - 1
    return sorted(full & ~U for U in open_sets(S, which))


def closure_bruteforce(S: FiniteSpace, A: Iterable[str]) -> frozenset[str]:
    """Smallest closed superset."""
    a = _mask(S, A)
    best = None
    for C in closed_sets(S):
        if a & ~C == 0 and (best is None or bin(C).count("1") < bin(best).count("1")):
            best = C
    return _members(S, best)


def is_normal_bruteforce(S: FiniteSpace) -> bool:
    """Every pair of disjoint closed sets has disjoint open neighbourhoods."""
    opens = sorted(open_sets(S), key=lambda m: bin(m).count("1"))
    closed = closed_sets(S)
    supers = {C: [U for U in opens if C & ~U == 0] for C in closed}
    for C, D in itertools.combinations(closed, 2):
        if C & D:
            continue
        if not any(U & V == 0 for U in supers[C] for V in supers[D]):
            return False
    return True


def cluster_points_bruteforce(S: FiniteSpace, prefix, period) -> frozenset[str]:
    """x clusters iff for every radius some term recurring in the period lies in B+(x, r).

    Terms of the period recur infinitely often, so "infinitely many n with
    d(x, s_n) < r" holds iff some period term qualifies.  Radii from
    :func:`candidate_radii` cover every distinct ball.
    """
    out = set()
    for x in S.points:
        if all(any(S.d(x, p) < r for p in period) for r in candidate_radii(S)):
            out.add(x)
    return frozenset(out)


def shortest_paths_fixpoint(raw) -> list[list[Fraction]]:
    """Relax m[i][j] = min(m[i][j], m[i][k] + m[k][j]) until nothing changes."""
    m = [[Fraction(v) for v in row] for row in raw]
    n = len(m)
    changed = True
    while changed:
        changed = False
        for i, j, k in itertools.product(range(n), repeat=3):
            if m[i][k] + m[k][j] < m[i][j]:
                m[i][j] = m[i][k] + m[k][j]
                changed = True
    return m


def lebesgue_holds_at(S: FiniteSpace, cover, delta) -> bool:
    """Every forward ball of radius delta lies inside some cover member."""
    members = [frozenset(m) for m in cover]
    r = max((v for row in S.table for v in row), default=Fraction(0)) + 1 if delta == INF else delta
    return all(any(ball(S, x, r) <= U for U in members) for x in S.points)


def lebesgue_bruteforce(S: FiniteSpace, cover):
    """Largest radius among table values (or INF) at which the ball condition holds.

    Balls only change just above a table value, so the supremum of good
    radii is a table value or unbounded.
    """
    if lebesgue_holds_at(S, cover, INF):
        return INF
    good = [v for v in sorted({v for row in S.table for v in row if v > 0}) if lebesgue_holds_at(S, cover, v)]
    return good[-1] if good else Fraction(0)


def isolation_bruteforce(S: FiniteSpace, x: str) -> Fraction:
    """I+(x) as the largest table value r with B+(x, r) = {x} (0 if none)."""
    best = Fraction(0)
    for r in sorted({v for row in S.table for v in row if v > 0}):
        if ball(S, x, r) == {x}:
            best = r
    return best
