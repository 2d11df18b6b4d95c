"""Remetrisation that turns a finite quasi-metric space into a UC one.

For X' the set of non-isolated points,

    rho(x, y) = d(x, y) + max(d(X', x), d(X', y))   for x != y,

and the discrete metric when X' is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .space import FiniteSpace, ValidationReport, discrete_metric
from .topology import accumulation_points, min_neighborhood

__all__ = ["RhoSpace", "rho_construct", "distance_from_set", "backward_topologies_agree"]


@dataclass(frozen=True)
class RhoSpace:
    base: FiniteSpace
    xprime: frozenset
    space: FiniteSpace
    discrete: bool
    report: ValidationReport

    @property
    def separation_failures(self) -> tuple:
        """Pairs where rho vanishes both ways; flagged, never silently accepted."""
        return tuple(v.points for v in self.report.by_axiom("separation"))

    @property
    def warnings(self) -> list[str]:
        return [f"separation fails for {a} and {b}" for a, b in self.separation_failures]

    @property
    def table(self):
        return self.space.table


def distance_from_set(S: FiniteSpace, A, x: str) -> Fraction:
    """d(A, x) = min over z in A of d(z, x)."""
    j = S.index(x)
    return min(S.table[S.index(z)][j] for z in A)


def rho_construct(S: FiniteSpace) -> RhoSpace:
    xprime = accumulation_points(S)
    if not xprime:
        out = discrete_metric(S.points, name=f"rho({S.name})" if S.name else "rho")
        return RhoSpace(S, xprime, out, True, out.validate())
    gap = {x: distance_from_set(S, xprime, x) for x in S.points}
    n = len(S)
    rows = [
        [
            Fraction(0) if i == j else S.table[i][j] + max(gap[S.points[i]], gap[S.points[j]])
            for j in range(n)
        ]
        for i in range(n)
    ]
    out = S.with_table(rows, name=f"rho({S.name})" if S.name else "rho")
    return RhoSpace(S, xprime, out, False, out.validate())


def backward_topologies_agree(S: FiniteSpace, T: FiniteSpace) -> bool:
    """Whether two tables on the same points give the same backward topology."""
    if S.points != T.points:
        raise ValueError("spaces have different points")
    return all(
        min_neighborhood(S, x, "backward") == min_neighborhood(T, x, "backward") for x in S.points
    )
