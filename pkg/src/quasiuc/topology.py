"""Forward and backward topology of a finite quasi-metric space.

On a finite space the forward topology is Alexandrov: the smallest
forward-open set containing ``x`` is ``{y : d(x,y) = 0}``, and every
open set is a union of these.  Everything here works from that
zero-distance relation; open-set lists are never materialised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .rational import INF, ExtRational, fmt
from .space import FiniteSpace, conjugate

__all__ = [
    "CoverError",
    "Cover",
    "LebesgueResult",
    "NormalityResult",
    "min_neighborhood",
    "closure",
    "is_open",
    "isolated_points",
    "accumulation_points",
    "is_normal",
    "lebesgue_number",
    "topology_included",
]


class CoverError(ValueError):
    pass


def _check_direction(which: str) -> None:
    if which not in ("forward", "backward"):
        raise ValueError(f"expected 'forward' or 'backward', got {which!r}")


def min_neighborhood(S: FiniteSpace, x: str, which: str = "forward") -> frozenset[str]:
    _check_direction(which)
    i = S.index(x)
    if which == "forward":
        return frozenset(p for p, v in zip(S.points, S.table[i]) if v == 0)
    return frozenset(p for j, p in enumerate(S.points) if S.table[j][i] == 0)


def closure(S: FiniteSpace, A: Iterable[str]) -> frozenset[str]:
    """Closure in the forward topology: points at distance 0 *to* some member of A."""
    idx = [S.index(a) for a in A]
    return frozenset(
        p for i, p in enumerate(S.points) if any(S.table[i][j] == 0 for j in idx)
    )


def is_open(S: FiniteSpace, A: Iterable[str], which: str = "forward") -> bool:
    _check_direction(which)
    A = frozenset(A)
    for a in A:
        S.index(a)
    T = S if which == "forward" else conjugate(S)
    return all(min_neighborhood(T, x) <= A for x in A)


def is_closed(S: FiniteSpace, A: Iterable[str]) -> bool:
    A = frozenset(A)
    return closure(S, A) == A


def isolated_points(S: FiniteSpace) -> frozenset[str]:
    return frozenset(x for x in S.points if min_neighborhood(S, x) == {x})


def accumulation_points(S: FiniteSpace) -> frozenset[str]:
    """X', the non-isolated points."""
    return frozenset(S.points) - isolated_points(S)


class NormalityResult(NamedTuple):
    normal: bool
    witness: tuple[frozenset[str], frozenset[str]] | None = None

    def __bool__(self) -> bool:
        return self.normal


def is_normal(S: FiniteSpace) -> NormalityResult:
    """Decide normality by the point-pair criterion.

    The space fails to be normal exactly when two points have disjoint
    closures but their minimal neighbourhoods meet; the two closures are
    then a pair of disjoint closed sets that cannot be separated.
    """
    cl = {x: closure(S, [x]) for x in S.points}
    nbhd = {x: min_neighborhood(S, x) for x in S.points}
    pts = S.points
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            x, y = pts[a], pts[b]
            if cl[x].isdisjoint(cl[y]) and not nbhd[x].isdisjoint(nbhd[y]):
                return NormalityResult(False, (cl[x], cl[y]))
    return NormalityResult(True, None)


@dataclass(frozen=True)
class Cover:
    members: tuple[frozenset[str], ...]

    @classmethod
    def of(cls, members: Iterable[Iterable[str]]) -> "Cover":
        return cls(tuple(frozenset(m) for m in members))

    def check(self, S: FiniteSpace) -> None:
        """Raise :class:`CoverError` unless this is an open cover of S by nonempty sets."""
        if not self.members:
            raise CoverError("empty cover")
        union: set[str] = set()
        for k, m in enumerate(self.members):
            if not m:
                raise CoverError(f"cover member {k} is empty")
            unknown = [p for p in m if p not in S]
            if unknown:
                raise CoverError(f"cover member {k} has unknown points {sorted(unknown)}")
            if not is_open(S, m):
                raise CoverError(f"cover member {k} {sorted(m)} is not forward-open")
            union |= m
        missing = set(S.points) - union
        if missing:
            raise CoverError(f"family does not cover {sorted(missing)}")

    def to_json(self) -> list[list[str]]:
        return [sorted(m) for m in self.members]


@dataclass(frozen=True)
class LebesgueResult:
    delta_star: ExtRational
    attribution: dict  # point -> (member index, threshold)

    @property
    def exists(self) -> bool:
        return self.delta_star > 0

    def to_json(self) -> dict:
        return {
            "delta_star": fmt(self.delta_star),
            "attribution": {
                p: {"member": k, "threshold": fmt(t)} for p, (k, t) in sorted(self.attribution.items())
            },
        }

    def __str__(self) -> str:
        lines = [f"delta_star = {fmt(self.delta_star)}"]
        for p, (k, t) in sorted(self.attribution.items()):
            lines.append(f"  {p}: member {k}, threshold {fmt(t)}")
        return "\n".join(lines)


def lebesgue_number(S: FiniteSpace, cover: Cover | Iterable[Iterable[str]]) -> LebesgueResult:
    """Largest delta such that every forward ball of radius <= delta fits in a member.

    Balls use strict inequality, so for a point x and member U containing
    it, ``B(x, delta) <= U`` iff ``delta <= min{d(x,y) : y not in U}``.
    """
    if not isinstance(cover, Cover):
        cover = Cover.of(cover)
    cover.check(S)
    attribution = {}
    for i, x in enumerate(S.points):
        best_k, best_t = -1, Fraction(-1)
        for k, U in enumerate(cover.members):
            if x not in U:
                continue
            outside = [S.table[i][j] for j, y in enumerate(S.points) if y not in U]
            t = min(outside) if outside else INF
            if t > best_t:
                best_k, best_t = k, t
        attribution[x] = (best_k, best_t)
    delta_star = min(t for _, t in attribution.values())
    return LebesgueResult(delta_star, attribution)


def topology_included(S: FiniteSpace, inner: str = "forward", outer: str = "backward") -> bool:
    """Whether every inner-open set is outer-open (e.g. tau(d) within tau(d-bar))."""
    _check_direction(inner)
    _check_direction(outer)
    return all(is_open(S, min_neighborhood(S, x, inner), outer) for x in S.points)
