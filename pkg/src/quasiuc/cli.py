"""Command-line entry point.

Usage:
    quasiuc validate SPACE
    quasiuc analyze SPACE
    quasiuc lebesgue [SPACE] COVER
    quasiuc witness WITNESS
    quasiuc zoo list | emit ID SIZE | check [ID]
    quasiuc suite [--trials N] [--only PART] [--artifacts DIR]

Flags --json, --horizon, --eps-grid and --seed are accepted before or
after the subcommand.

Exit codes:
    0  success (valid space, claims match, witness confirmed, suite clean)
    1  a check failed
    2  the input could not be parsed or is not usable
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import harness
from .functionals import isolation
from .io import (
    InvalidSpaceError,
    ParseError,
    dumps,
    load_cover,
    load_space,
    load_witness,
    space_to_json,
)
from .rational import fmt
from .realfunctions import describe_fn, verify_nonuc_witness
from .sequences import DEFAULT_EPS_GRID, DEFAULT_HORIZON, describe
from .space import StructureError, UnknownPointError, is_T1
from .topology import CoverError, accumulation_points, is_normal, isolated_points, lebesgue_number, min_neighborhood, topology_included
from .zoo import CarrierError, truncation, zoo_get, zoo_ids

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    """Bad input discovered after argument parsing."""


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _common(suppress: bool) -> argparse.ArgumentParser:
    # Subcommand copies use SUPPRESS so they only override when given.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--horizon", type=_positive_int, default=d(DEFAULT_HORIZON), help=f"index horizon (default {DEFAULT_HORIZON})")
    p.add_argument("--eps-grid", type=_positive_int, default=d(DEFAULT_EPS_GRID), help=f"test eps = 1/k for k <= N (default {DEFAULT_EPS_GRID})")
    p.add_argument("--seed", type=int, default=d(1), help="seed for randomized suites (default 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasiuc",
        description="Exact checks on finite and countable quasi-metric spaces.",
        parents=[_common(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = [_common(True)]

    p = sub.add_parser("validate", parents=common, help="check the quasi-metric axioms of a space file")
    p.add_argument("space")

    p = sub.add_parser("analyze", parents=common, help="topological summary of a valid space")
    p.add_argument("space")

    p = sub.add_parser("lebesgue", parents=common, help="largest Lebesgue number of an open cover")
    p.add_argument("files", nargs="+", metavar="FILE", help="[SPACE] COVER; COVER may embed its space")

    p = sub.add_parser("witness", parents=common, help="verify a non-uniform-continuity witness")
    p.add_argument("witness")

    p = sub.add_parser("zoo", parents=common, help="catalog of countable spaces")
    zsub = p.add_subparsers(dest="zoo_command", required=True, metavar="ACTION")
    zsub.add_parser("list", parents=common, help="list space ids")
    q = zsub.add_parser("emit", parents=common, help="write a finite truncation as a space file")
    q.add_argument("id")
    q.add_argument("size", type=_positive_int)
    q.add_argument("-o", "--output", help="file to write (default stdout)")
    q = zsub.add_parser("check", parents=common, help="run the claims of one space, or all")
    q.add_argument("id", nargs="?", default="all")

    p = sub.add_parser("suite", parents=common, help="randomized property suites and zoo regression")
    p.add_argument("--only", choices=("all", "finite", "oracle", "lebesgue", "rho", "zoo", "mutation"), default="all")
    p.add_argument("--trials", type=_positive_int, default=100, help="finite-suite trials (default 100)")
    p.add_argument("--max-size", type=_positive_int, default=8, help="largest finite space (default 8)")
    p.add_argument("--min-size", type=_positive_int, default=2)
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for the finite suite")
    p.add_argument("--artifacts", metavar="DIR", help="write replay files for failed checks here")
    return parser


def _emit(args, obj: dict, text: str) -> None:
    sys.stdout.write(dumps(obj) if args.json else text.rstrip("\n") + "\n")


# -- subcommands ---------------------------------------------------------------------


def cmd_validate(args) -> int:
    S = load_space(args.space, force=True)
    rep = S.validate()
    _emit(args, {"space": S.name, **rep.to_json()}, f"{S.name or args.space}: {rep}")
    return EXIT_OK if rep.valid else EXIT_FAIL


def cmd_analyze(args) -> int:
    S = load_space(args.space)
    normal = is_normal(S)
    # a one-point space has no complement to measure against
    iso = {x: fmt(isolation(S, x).value) if len(S) > 1 else None for x in S.points}
    fwd_in_bwd = topology_included(S, "forward", "backward")
    bwd_in_fwd = topology_included(S, "backward", "forward")
    obj = {
        "space": S.name,
        "points": list(S.points),
        "t1": is_T1(S),
        "isolated": sorted(isolated_points(S), key=S.index),
        "accumulation": sorted(accumulation_points(S), key=S.index),
        "normal": normal.normal,
        "normality_witness": None if normal.witness is None else [sorted(A, key=S.index) for A in normal.witness],
        "isolation": iso,
        "min_neighborhoods": {
            w: {x: sorted(min_neighborhood(S, x, w), key=S.index) for x in S.points} for w in ("forward", "backward")
        },
        "topology": {"forward_in_backward": fwd_in_bwd, "backward_in_forward": bwd_in_fwd},
    }
    lines = [
        f"space {S.name or args.space} ({len(S)} points)",
        f"T1: {'yes' if obj['t1'] else 'no'}",
        f"isolated points: {', '.join(obj['isolated']) or '(none)'}",
        f"accumulation points X': {', '.join(obj['accumulation']) or '(none)'}",
        f"normal: {'yes' if normal.normal else 'no'}",
    ]
    if normal.witness is not None:
        a, b = obj["normality_witness"]
        lines.append(f"  inseparable closed sets: {{{', '.join(a)}}} and {{{', '.join(b)}}}")
    lines.append("isolation I+(x):")
    lines += [f"  {x}: {v if v is not None else 'undefined (one-point space)'}" for x, v in iso.items()]
    lines.append(f"tau(d) within tau(conj d): {'yes' if fwd_in_bwd else 'no'}")
    lines.append(f"tau(conj d) within tau(d): {'yes' if bwd_in_fwd else 'no'}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_lebesgue(args) -> int:
    if len(args.files) > 2:
        raise UsageError("lebesgue takes [SPACE] COVER")
    space = load_space(args.files[0]) if len(args.files) == 2 else None
    S, cover = load_cover(args.files[-1], space)
    res = lebesgue_number(S, cover)
    _emit(args, {"space": S.name, "cover": cover.to_json(), **res.to_json()}, str(res))
    return EXIT_OK


def cmd_witness(args) -> int:
    w = load_witness(args.witness)
    v = verify_nonuc_witness(w, args.horizon, args.eps_grid)
    obj = {
        "space": w.space.id,
        "f": describe_fn(w.f),
        "seqX": describe(w.seq_x),
        "seqY": describe(w.seq_y),
        "eps": fmt(w.eps),
        "verdict": v.to_json(),
    }
    text = f"{w.space.id}: f = {describe_fn(w.f)}, x_n = {describe(w.seq_x)}, y_n = {describe(w.seq_y)}, eps = {fmt(w.eps)}\n{v}"
    _emit(args, obj, text)
    return EXIT_OK if v.holds else EXIT_FAIL


def _zoo_space(sid: str):
    try:
        return zoo_get(sid)
    except KeyError:
        raise UsageError(f"unknown zoo space {sid!r}; try 'zoo list'") from None


def cmd_zoo(args) -> int:
    if args.zoo_command == "list":
        rows = [(i, zoo_get(i)) for i in zoo_ids()]
        obj = {"spaces": [{"id": i, "title": Z.title, "carrier": Z.carrier_text, "claims": [c.id for c in Z.claims]} for i, Z in rows]}
        width = max(len(i) for i, _ in rows)
        _emit(args, obj, "\n".join(f"{i:<{width}}  {Z.title}  [{Z.carrier_text}]" for i, Z in rows))
        return EXIT_OK
    if args.zoo_command == "emit":
        S = truncation(_zoo_space(args.id), args.size)
        data = dumps(space_to_json(S))
        if args.output:
            Path(args.output).write_text(data, encoding="utf-8")
        else:
            sys.stdout.write(data)
        return EXIT_OK
    ids = None if args.id == "all" else [_zoo_space(args.id).id]
    rep = harness.run_zoo_suite(args.horizon, args.eps_grid, ids=ids)
    if args.json:
        sys.stdout.write(dumps(rep.to_json()))
    else:
        sys.stdout.write(_claim_table(rep) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _claim_table(rep: harness.SuiteReport) -> str:
    """Two columns: claim statement, verdict."""
    from .sequences import Verdict

    claims = [c for c in rep.checks if c.state != "metadata"]
    width = min(72, max(len(c.about) for c in claims))
    lines = []
    for c in claims:
        v = Verdict.from_json(c.detail["verdict"])
        lines.append(f"{c.id:<24} {c.about:<{width}}  {c.state}: {v}")
    for c in rep.checks:
        if c.state == "metadata":
            lines.append(f"{c.id:<24} {c.about:<{width}}  recorded property (not executable)")
    lines.append("totals: " + ", ".join(f"{k}={v}" for k, v in rep.totals().items()))
    return "\n".join(lines)


def cmd_suite(args) -> int:
    only, seed = args.only, args.seed
    if only == "finite":
        rep = harness.run_finite_suite(seed, args.trials, args.max_size, args.min_size, args.jobs)
    elif only == "oracle":
        rep = harness.run_oracle_suite(seed)
    elif only == "lebesgue":
        rep = harness.run_lebesgue_exactness(seed)
    elif only == "rho":
        rep = harness.run_rho_suite(seed)
    elif only == "zoo":
        rep = harness.run_zoo_suite(args.horizon, args.eps_grid)
    elif only == "mutation":
        rep = harness.run_mutation_suite(horizon=args.horizon, eps=args.eps_grid)
    else:
        rep = harness.merge_reports(
            "all",
            [
                harness.run_finite_suite(seed, args.trials, args.max_size, args.min_size, args.jobs),
                harness.run_oracle_suite(seed),
                harness.run_lebesgue_exactness(seed),
                harness.run_rho_suite(seed),
                harness.run_zoo_suite(args.horizon, args.eps_grid),
            ],
        )
    if args.artifacts and rep.failures:
        for p in harness.write_artifacts(rep, args.artifacts):
            print(f"artifact: {p}", file=sys.stderr)
    if args.json:
        sys.stdout.write(dumps(rep.to_json()))
    else:
        sys.stdout.write(rep.text() + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "lebesgue": cmd_lebesgue,
    "witness": cmd_witness,
    "zoo": cmd_zoo,
    "suite": cmd_suite,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, InvalidSpaceError, StructureError, CoverError, CarrierError, UnknownPointError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # unknown point labels and malformed rationals inside otherwise valid JSON
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
