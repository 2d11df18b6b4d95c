"""JSON file formats for spaces, covers, sequences, functions and witnesses.

Distances and other rationals are strings of the form ``INT`` or
``INT/POSINT``.  Every ``*_to_json`` has an inverse ``*_from_json`` and
the round trip is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .rational import fmt, parse_rational
from .realfunctions import (
    ConstantFn,
    IndexValue,
    InverseOf,
    NonUCWitness,
    Reciprocal,
    RealFn,
    TableFn,
)
from .sequences import Ceil, Const, Constant, FromList, Indexed, Interleave, MaxOf, Modulus, SequenceExpr
from .space import FiniteSpace, StructureError, ValidationReport
from .topology import Cover

__all__ = [
    "ParseError",
    "InvalidSpaceError",
    "space_to_json",
    "space_from_json",
    "load_space",
    "dump_space",
    "cover_to_json",
    "cover_from_json",
    "load_cover",
    "seq_to_json",
    "seq_from_json",
    "fn_to_json",
    "fn_from_json",
    "modulus_to_json",
    "modulus_from_json",
    "witness_to_json",
    "witness_from_json",
    "load_witness",
    "read_json",
    "dumps",
]


class ParseError(ValueError):
    """Input does not match a documented file format."""


class InvalidSpaceError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"space violates the quasi-metric axioms:\n{report}")
        self.report = report


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def _rat(text, what: str, nonnegative: bool = False) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise ParseError(f"{what}: expected a rational string, got {text!r}")
    try:
        return parse_rational(text, nonnegative=nonnegative)
    except ValueError as exc:
        raise ParseError(f"{what}: {exc}") from None


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


# -- spaces ---------------------------------------------------------------------------


def space_to_json(S: FiniteSpace) -> dict:
    return {"name": S.name, "points": list(S.points), "d": [[fmt(v) for v in row] for row in S.table]}


def space_from_json(obj: dict, force: bool = False) -> FiniteSpace:
    pts = _need(obj, "points", "space")
    rows = _need(obj, "d", "space")
    if not isinstance(pts, list) or not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError("space: 'points' must be a list and 'd' a list of lists")
    table = [[_rat(v, f"space d[{i}][{j}]", nonnegative=True) for j, v in enumerate(r)] for i, r in enumerate(rows)]
    try:
        S = FiniteSpace(tuple(pts), table, obj.get("name", ""))
    except StructureError as exc:
        raise ParseError(f"space: {exc}") from None
    if not force:
        rep = S.validate()
        if not rep.valid:
            raise InvalidSpaceError(rep)
    return S


def load_space(path, force: bool = False) -> FiniteSpace:
    return space_from_json(read_json(path), force)


def dump_space(S: FiniteSpace, path) -> None:
    Path(path).write_text(dumps(space_to_json(S)), encoding="utf-8")


# -- covers ---------------------------------------------------------------------------


def cover_to_json(S: FiniteSpace, C: Cover, embed: bool = True) -> dict:
    return {"space": space_to_json(S) if embed else S.name, "cover": C.to_json()}


def cover_from_json(obj: dict, space: Optional[FiniteSpace] = None, force: bool = False) -> tuple[FiniteSpace, Cover]:
    """The ``space`` field embeds a space, or names the space passed in."""
    ref = _need(obj, "space", "cover file")
    members = _need(obj, "cover", "cover file")
    if isinstance(ref, dict):
        S = space_from_json(ref, force)
    elif isinstance(ref, str):
        if space is None:
            raise ParseError(f"cover names space {ref!r} but no space was supplied")
        if ref != space.name:
            raise ParseError(f"cover is for space {ref!r}, not {space.name!r}")
        S = space
    else:
        raise ParseError("cover file: 'space' must be an object or a name")
    if not isinstance(members, list) or any(not isinstance(m, list) for m in members):
        raise ParseError("cover file: 'cover' must be a list of label lists")
    return S, Cover.of(members)


def load_cover(path, space: Optional[FiniteSpace] = None, force: bool = False):
    return cover_from_json(read_json(path), space, force)


# -- sequences ------------------------------------------------------------------------


def seq_to_json(seq: SequenceExpr) -> dict:
    if isinstance(seq, Constant):
        return {"kind": "constant", "point": str(seq.point)}
    if isinstance(seq, Indexed):
        out = {"kind": "indexed", "family": seq.family, "offset": seq.offset}
        if seq.scale != 1:
            out["scale"] = seq.scale
        if seq.shift:
            out["shift"] = fmt(seq.shift)
        return out
    if isinstance(seq, FromList):
        return {"kind": "fromlist", "prefix": [str(p) for p in seq.prefix], "period": [str(p) for p in seq.period]}
    if isinstance(seq, Interleave):
        return {"kind": "interleave", "first": seq_to_json(seq.first), "second": seq_to_json(seq.second)}
    raise TypeError(f"not a sequence expression: {seq!r}")


def seq_from_json(obj: dict) -> SequenceExpr:
    kind = _need(obj, "kind", "sequence")
    try:
        if kind == "constant":
            return Constant(str(_need(obj, "point", "constant sequence")))
        if kind == "indexed":
            family = _need(obj, "family", "indexed sequence")
            shift = _rat(obj.get("shift", "0"), "indexed shift")
            if family == "shifted":
                family = _need(obj, "base", "shifted family")
            return Indexed(family, int(obj.get("offset", 0)), int(obj.get("scale", 1)), shift)
        if kind == "fromlist":
            return FromList(
                tuple(str(p) for p in obj.get("prefix", [])),
                tuple(str(p) for p in _need(obj, "period", "fromlist sequence")),
            )
        if kind == "interleave":
            return Interleave(seq_from_json(_need(obj, "first", "interleave")), seq_from_json(_need(obj, "second", "interleave")))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"sequence: {exc}") from None
    raise ParseError(f"sequence: unknown kind {kind!r}")


# -- functions ------------------------------------------------------------------------


def fn_to_json(f: RealFn) -> dict:
    if isinstance(f, TableFn):
        return {"fn": "table", "values": {k: fmt(v) for k, v in f.values}}
    if isinstance(f, Reciprocal):
        return {"fn": "reciprocal", "at_zero": fmt(f.at_zero)}
    if isinstance(f, ConstantFn):
        return {"fn": "constant", "c": fmt(f.c)}
    if isinstance(f, IndexValue):
        return {"fn": "index", "rules": {t: [fmt(c), pw] for t, c, pw in f.rules}}
    if isinstance(f, InverseOf):
        return {"fn": "inverse", "of": fn_to_json(f.fn)}
    raise TypeError(f"not a function expression: {f!r}")


def fn_from_json(obj: dict) -> RealFn:
    kind = _need(obj, "fn", "function")
    if kind == "table":
        vals = _need(obj, "values", "table function")
        return TableFn.of({k: _rat(v, f"table value at {k}") for k, v in vals.items()})
    if kind == "reciprocal":
        if "at_zero" not in obj:
            raise ParseError("reciprocal: the value at 0 must be given explicitly ('at_zero')")
        return Reciprocal(_rat(obj["at_zero"], "reciprocal at_zero"))
    if kind == "constant":
        return ConstantFn(_rat(_need(obj, "c", "constant function"), "constant"))
    if kind == "index":
        rules = _need(obj, "rules", "index function")
        return IndexValue(tuple(sorted((t, _rat(c, f"index rule {t}"), int(pw)) for t, (c, pw) in rules.items())))
    if kind == "inverse":
        return InverseOf(fn_from_json(_need(obj, "of", "inverse function")))
    raise ParseError(f"function: unknown fn {kind!r}")


# -- moduli ---------------------------------------------------------------------------


def modulus_to_json(m: Modulus) -> dict:
    if isinstance(m, Ceil):
        return {"rule": "ceil", "c": fmt(m.c), "power": m.power, "offset": m.offset}
    if isinstance(m, Const):
        return {"rule": "const", "n": m.n}
    if isinstance(m, MaxOf):
        return {"rule": "max", "a": modulus_to_json(m.a), "b": modulus_to_json(m.b)}
    raise TypeError(f"not a modulus: {m!r}")


def modulus_from_json(obj: Optional[dict]) -> Optional[Modulus]:
    if obj is None:
        return None
    rule = _need(obj, "rule", "modulus")
    try:
        if rule == "ceil":
            return Ceil(_rat(obj.get("c", "1"), "modulus c"), int(obj.get("power", 1)), int(obj.get("offset", 0)))
        if rule == "const":
            return Const(int(_need(obj, "n", "const modulus")))
        if rule == "max":
            return MaxOf(modulus_from_json(_need(obj, "a", "max modulus")), modulus_from_json(_need(obj, "b", "max modulus")))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"modulus: {exc}") from None
    raise ParseError(f"modulus: unknown rule {rule!r}")


# -- witnesses ------------------------------------------------------------------------


def witness_to_json(w: NonUCWitness) -> dict:
    return {
        "space": w.space.id,
        "f": fn_to_json(w.f),
        "seqX": seq_to_json(w.seq_x),
        "seqY": seq_to_json(w.seq_y),
        "eps": fmt(w.eps),
        "modulus": None if w.modulus is None else modulus_to_json(w.modulus),
        "n0": w.n0,
    }


def witness_from_json(obj: dict) -> NonUCWitness:
    from .zoo import zoo_get

    sid = _need(obj, "space", "witness")
    try:
        space = zoo_get(sid)
    except KeyError as exc:
        raise ParseError(str(exc)) from None
    return NonUCWitness(
        space,
        fn_from_json(_need(obj, "f", "witness")),
        seq_from_json(_need(obj, "seqX", "witness")),
        seq_from_json(_need(obj, "seqY", "witness")),
        _rat(_need(obj, "eps", "witness"), "witness eps"),
        modulus_from_json(obj.get("modulus")),
        int(obj.get("n0", 1)),
    )


def load_witness(path) -> NonUCWitness:
    return witness_from_json(read_json(path))
