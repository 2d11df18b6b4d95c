"""Finite quasi-metric spaces over exact rationals.

A :class:`FiniteSpace` is a labelled point list plus a square table of
Fractions, ``table[i][j] = d(points[i], points[j])``.  Construction only
checks structure (shape, labels, rational entries); the quasi-metric
axioms are checked by :func:`validate_axioms`, which reports every
violated instance rather than stopping at the first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rational import as_fraction, fmt, parse_rational

__all__ = [
    "StructureError",
    "UnknownPointError",
    "Violation",
    "ValidationReport",
    "FiniteSpace",
    "validate_axioms",
    "conjugate",
    "sup_metric",
    "ball",
    "is_T1",
    "triangle_closure",
    "separation_quotient",
    "discrete_metric",
    "random_raw_table",
    "random_space",
    "random_t1_space",
    "random_non_t1_space",
]


class StructureError(ValueError):
    """Malformed table: wrong shape, duplicate labels, non-rational entries."""


class UnknownPointError(KeyError):
    pass


AXIOMS = ("nonnegativity", "zero-diagonal", "separation", "triangle")


@dataclass(frozen=True)
class Violation:
    axiom: str
    points: tuple[str, ...]
    values: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "points": list(self.points),
            "values": [fmt(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Violation":
        return cls(
            obj["axiom"],
            tuple(obj["points"]),
            tuple(parse_rational(v) for v in obj["values"]),
        )

    def __str__(self) -> str:
        pts = ", ".join(self.points)
        vals = ", ".join(fmt(v) for v in self.values)
        return f"{self.axiom} at ({pts}): {vals}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "valid" if self.valid else "invalid"

    def by_axiom(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "violations": [v.to_json() for v in self.violations],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ValidationReport":
        report = cls(tuple(Violation.from_json(v) for v in obj["violations"]))
        if report.verdict != obj["verdict"]:
            raise ValueError("verdict disagrees with the violation list")
        return report

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        lines = [f"invalid ({len(self.violations)} violations)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _coerce_table(table, labels) -> tuple[tuple[str, ...], tuple[tuple[Fraction, ...], ...]]:
    labels = tuple(labels)
    if any(not isinstance(p, str) for p in labels):
        raise StructureError("labels must be strings")
    if len(set(labels)) != len(labels):
        raise StructureError("labels must be distinct")
    rows = [list(r) for r in table]
    n = len(labels)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(
            f"table shape does not match {n} labels: "
            f"{len(rows)} rows of lengths {[len(r) for r in rows]}"
        )
    try:
        out = tuple(tuple(as_fraction(v) for v in r) for r in rows)
    except (TypeError, ValueError) as exc:
        raise StructureError(str(exc)) from None
    return labels, out


def validate_axioms(table, labels) -> ValidationReport:
    """Check nonnegativity, zero diagonal, separation and the triangle inequality.

    Triangle violations are reported as ``(x, z, y)`` in path order with
    values ``(d(x,y), d(x,z), d(z,y))``.  Raises :class:`StructureError`
    for shape problems, which are not axiom violations.
    """
    labels, t = _coerce_table(table, labels)
    n = len(labels)
    found: list[Violation] = []
    for i in range(n):
        for j in range(n):
            if t[i][j] < 0:
                found.append(Violation("nonnegativity", (labels[i], labels[j]), (t[i][j],)))
    for i in range(n):
        if t[i][i] != 0:
            found.append(Violation("zero-diagonal", (labels[i],), (t[i][i],)))
    for i in range(n):
        for j in range(i + 1, n):
            if t[i][j] == 0 and t[j][i] == 0:
                found.append(Violation("separation", (labels[i], labels[j]), (t[i][j], t[j][i])))
    for i in range(n):
        for k in range(n):
            tik = t[i][k]
            row_k = t[k]
            for j in range(n):
                if t[i][j] > tik + row_k[j]:
                    found.append(
                        Violation(
                            "triangle",
                            (labels[i], labels[k], labels[j]),
                            (t[i][j], tik, row_k[j]),
                        )
                    )
    return ValidationReport(tuple(found))


@dataclass(frozen=True)
class FiniteSpace:
    """Labelled finite set with an exact distance table."""

    points: tuple[str, ...]
    table: tuple[tuple[Fraction, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        labels, t = _coerce_table(self.table, self.points)
        object.__setattr__(self, "points", labels)
        object.__setattr__(self, "table", t)

    @classmethod
    def from_rows(cls, labels: Iterable[str], rows, name: str = "") -> "FiniteSpace":
        return cls(tuple(labels), rows, name)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownPointError(x) from None

    def d(self, x: str, y: str) -> Fraction:
        return self.table[self.index(x)][self.index(y)]

    # shared protocol with zoo spaces
    distance = d

    def canonical(self, x: str) -> str:
        self.index(x)
        return x

    def parse_point(self, text: str) -> str:
        return self.canonical(text)

    def enumerate(self):
        return iter(self.points)

    def validate(self) -> ValidationReport:
        return validate_axioms(self.table, self.points)

    def distinct_values(self) -> list[Fraction]:
        return sorted({v for row in self.table for v in row})

    def subspace(self, labels: Iterable[str], name: str = "") -> "FiniteSpace":
        idx = [self.index(p) for p in labels]
        rows = [[self.table[i][j] for j in idx] for i in idx]
        return FiniteSpace(tuple(self.points[i] for i in idx), rows, name or self.name)

    def with_table(self, rows, name: str | None = None) -> "FiniteSpace":
        return FiniteSpace(self.points, rows, self.name if name is None else name)

    def __str__(self) -> str:
        width = max([len(p) for p in self.points] + [len(fmt(v)) for r in self.table for v in r])
        head = " " * (width + 1) + " ".join(p.rjust(width) for p in self.points)
        lines = [head]
        for p, row in zip(self.points, self.table):
            lines.append(p.rjust(width) + " " + " ".join(fmt(v).rjust(width) for v in row))
        return "\n".join(lines)


def conjugate(S: FiniteSpace) -> FiniteSpace:
    n = len(S)
    rows = [[S.table[j][i] for j in range(n)] for i in range(n)]
    return S.with_table(rows)


def sup_metric(S: FiniteSpace) -> FiniteSpace:
    """The associated metric max(d(x,y), d(y,x))."""
    n = len(S)
    t = S.table
    rows = [[max(t[i][j], t[j][i]) for j in range(n)] for i in range(n)]
    return S.with_table(rows)


def ball(S: FiniteSpace, x: str, eps, direction: str = "forward") -> frozenset[str]:
    """Open ball ``{y : d(x,y) < eps}`` (forward) or ``{y : d(y,x) < eps}`` (backward)."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("ball radius must be positive")
    i = S.index(x)
    if direction == "forward":
        return frozenset(p for p, v in zip(S.points, S.table[i]) if v < eps)
    if direction == "backward":
        return frozenset(p for j, p in enumerate(S.points) if S.table[j][i] < eps)
    raise ValueError(f"direction must be 'forward' or 'backward', not {direction!r}")


def is_T1(S: FiniteSpace) -> bool:
    n = len(S)
    return all(S.table[i][j] > 0 for i in range(n) for j in range(n) if i != j)


def triangle_closure(raw) -> list[list[Fraction]]:
    """Min-plus transitive closure (Floyd-Warshall over Fractions).

    The result satisfies the triangle inequality, is entrywise <= ``raw``
    and is a fixed point of this function.
    """
    m = [[as_fraction(v) for v in row] for row in raw]
    n = len(m)
    if any(len(r) != n for r in m):
        raise StructureError("closure needs a square matrix")
    for i in range(n):
        if m[i][i] != 0:
            raise ValueError(f"nonzero diagonal entry at {i}")
        if any(v < 0 for v in m[i]):
            raise ValueError(f"negative entry in row {i}")
    for k in range(n):
        mk = m[k]
        for i in range(n):
            mik = m[i][k]
            row = m[i]
            for j in range(n):
                via = mik + mk[j]
                if via < row[j]:
                    row[j] = via
    return m


def separation_quotient(table, labels: Sequence[str] | None = None, name: str = "") -> FiniteSpace:
    """Merge points at symmetric distance zero; requires the triangle inequality.

    Merged classes are labelled by joining member labels with ``+`` in
    input order.
    """
    n = len(table)
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    t = [[as_fraction(v) for v in row] for row in table]
    cls_of = [-1] * n
    classes: list[list[int]] = []
    for i in range(n):
        if cls_of[i] >= 0:
            continue
        members = [i] + [j for j in range(i + 1, n) if cls_of[j] < 0 and t[i][j] == 0 and t[j][i] == 0]
        for j in members:
            cls_of[j] = len(classes)
        classes.append(members)
    reps = [c[0] for c in classes]
    for c in classes:
        for j in c[1:]:
            if [t[j][k] for k in range(n)] != [t[c[0]][k] for k in range(n)] or [
                t[k][j] for k in range(n)
            ] != [t[k][c[0]] for k in range(n)]:
                raise ValueError("quotient is not well defined; apply triangle_closure first")
    new_labels = ["+".join(labels[j] for j in c) for c in classes]
    rows = [[t[a][b] for b in reps] for a in reps]
    return FiniteSpace(tuple(new_labels), rows, name)


def discrete_metric(labels: Iterable[str], name: str = "") -> FiniteSpace:
    labels = tuple(labels)
    n = len(labels)
    return FiniteSpace(labels, [[Fraction(int(i != j)) for j in range(n)] for i in range(n)], name)


def random_raw_table(rng: random.Random, size: int, q: int = 8, positive: bool = False) -> list[list[Fraction]]:
    """Entries uniform on ``{k/q : 0 <= k <= q}`` (``k >= 1`` if *positive*), zero diagonal."""
    lo = 1 if positive else 0
    return [
        [Fraction(0) if i == j else Fraction(rng.randint(lo, q), q) for j in range(size)]
        for i in range(size)
    ]


def _labels(size: int) -> list[str]:
    return [f"p{i}" for i in range(size)]


def random_space(rng: random.Random, size: int, q: int = 8, positive: bool = False) -> FiniteSpace:
    """Generator pipeline: raw table -> triangle_closure -> separation_quotient."""
    raw = random_raw_table(rng, size, q, positive)
    return separation_quotient(triangle_closure(raw), _labels(size), name=f"random-{size}")


def random_t1_space(rng: random.Random, size: int, q: int = 8) -> FiniteSpace:
    # positive raw entries stay positive under min-plus closure
    return random_space(rng, size, q, positive=True)


def random_non_t1_space(rng: random.Random, size: int, q: int = 8, tries: int = 100) -> FiniteSpace:
    if size < 2:
        raise ValueError("a non-T1 space needs at least two points")
    for _ in range(tries):
        raw = random_raw_table(rng, size, q)
        i, j = rng.sample(range(size), 2)
        raw[i][j] = Fraction(0)
        S = separation_quotient(triangle_closure(raw), _labels(size), name=f"random-non-t1-{size}")
        if not is_T1(S):
            return S
    raise RuntimeError("could not draw a non-T1 space")
