"""Command-line front-end.

Subcommands::

    neutroprob eval FILE        evaluate a program (- reads stdin)
    neutroprob classify FILE    classify every declared event
    neutroprob worlds FILE      value statements against a world table
    neutroprob check            run the brute-force self-checks

Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 evaluation error,
4 self-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from . import dsl, oracle, worlds
from .dsl import QueryKind, Style
from .nonstandard import Bound, MonadTag
from .nsset import NSSet
from .probability import ClassificationReport, ComponentFlag, Label, NPTriple, classify

_TAG_STR = {MonadTag.MINUS: "-", MonadTag.NONE: "0", MonadTag.PLUS: "+"}


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _bound_json(b: Bound) -> dict:
    return {"v": str(b.value), "tag": _TAG_STR[b.tag]}


def _set_json(s: NSSet) -> list:
    return [{"lo": _bound_json(p.lo), "hi": _bound_json(p.hi)} for p in s.pieces]


def _report_json(query: str, triple: NPTriple, report: ClassificationReport) -> dict:
    return {
        "query": query,
        "T": _set_json(triple.truth),
        "I": _set_json(triple.indeterminacy),
        "F": _set_json(triple.falsity),
        "n_inf": str(report.n_inf),
        "n_sup": str(report.n_sup),
        "labels": [l.value for l in Label if l in report.labels],
        "flags": [f.value for f in ComponentFlag if f in report.flags],
    }


def _print_json(objs: list, out: TextIO) -> None:
    out.write(json.dumps(objs, indent=2) + "\n")


def run_eval(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        src = _read_input(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    style = Style(args.style)
    try:
        results = dsl.evaluate(dsl.parse(src))
    except (dsl.LexError, dsl.ParseError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except dsl.EvalError as exc:
        print(f"error: {exc}", file=err)
        return 3
    if args.json:
        _print_json(
            [
                _report_json(r.text, r.triple, r.report or classify(r.triple))
                for r in results
            ],
            out,
        )
        return 0
    for r in results:
        if r.kind is QueryKind.NP:
            print(f"{r.text} = {dsl.render_triple(r.triple, style)}", file=out)
        else:
            assert r.report is not None
            print(f"{r.text} = {dsl.render_report(r.report, style)}", file=out)
    return 0


def run_classify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Classify every declaration of a program, in source order."""
    try:
        src = _read_input(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    style = Style(args.style)
    try:
        program = dsl.parse(src)
        dsl.evaluate(program)  # surfaces duplicate declarations
    except (dsl.LexError, dsl.ParseError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except dsl.EvalError as exc:
        print(f"error: {exc}", file=err)
        return 3
    decls = program.declarations
    if args.json:
        _print_json(
            [
                _report_json(f"classify({d.name})", d.value, classify(d.value))
                for d in decls
            ],
            out,
        )
        return 0
    for d in decls:
        print(f"classify({d.name}) = {dsl.render_report(classify(d.value), style)}", file=out)
    return 0


def run_worlds(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        src = _read_input(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    try:
        table = json.loads(src)
        world_names = table["worlds"]
        statements = table["statements"]
        if (
            not isinstance(world_names, list)
            or not world_names
            or not all(isinstance(w, str) for w in world_names)
            or not isinstance(statements, dict)
        ):
            raise ValueError("expected {\"worlds\": [names], \"statements\": {name: [status strings]}}")
        parsed = {}
        for name, strings in statements.items():
            if not isinstance(strings, list) or len(strings) != len(world_names):
                raise ValueError(
                    f"statement {name!r} needs one status string per world "
                    f"({len(world_names)} worlds)"
                )
            parsed[name] = worlds.WorldAssignment.from_strings(world_names, strings)
    except (KeyError, TypeError, ValueError) as exc:
        # A malformed world table is not a well-formed statement list:
        # its valuation is n/a.
        print(f"error: {exc} ({worlds.nl_nwff()})", file=err)
        return 2
    records = []
    for name, assignment in parsed.items():
        value = worlds.nl_triple(assignment)
        notes = worlds.annotate(assignment, value)
        records.append((name, value, notes))
    if args.json:
        _print_json(
            [
                {
                    "statement": name,
                    "t": value.t.render(),
                    "f": value.f.render(),
                    "i": value.i.render(),
                    "annotations": list(notes),
                }
                for name, value, notes in records
            ],
            out,
        )
        return 0
    for name, value, notes in records:
        suffix = (" " + " ".join(notes)) if notes else ""
        print(f"{name}: {value.render()}{suffix}", file=out)
    return 0


def run_check(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.cases == 0:
        print("0 cases", file=out)
        return 0
    failures = oracle.tag_table_failures()
    if failures:
        f = failures[0]
        print("tag table mismatch:", file=out)
        print(f"  op = {f.op}, role = {f.role.value}", file=out)
        print(f"  a = {f.a}", file=out)
        print(f"  b = {f.b}", file=out)
        print(f"  got = {f.got}", file=out)
        return 4
    table_cases = 3 * len(oracle.TAG_TABLE_VALUES) ** 2 * 9 * 2
    mismatch = oracle.agreement_counterexample(args.seed, args.cases)
    if mismatch is not None:
        print(f"set operation mismatch (case {mismatch.case}, op {mismatch.op}):", file=out)
        print(f"  a = {mismatch.a}", file=out)
        print(f"  b = {mismatch.b}", file=out)
        print(f"  got      = {mismatch.got}", file=out)
        print(f"  expected = {mismatch.expected}", file=out)
        return 4
    if args.json:
        _print_json(
            [{"tag_table_cases": table_cases, "set_pairs": args.cases, "ok": True}], out
        )
        return 0
    print(f"tag table: {table_cases} cases ok", file=out)
    print(f"set operations: {args.cases} pairs x 3 ops ok (seed {args.seed})", file=out)
    print("all checks passed", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--style",
        choices=[s.value for s in Style],
        default=Style.FRACTION.value,
        help="number rendering style (default: fraction)",
    )

    parser = argparse.ArgumentParser(
        prog="neutroprob",
        description="Set-valued probability triples over the non-standard rational line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a program")
    p_eval.add_argument("file", help="program file, or - for stdin")
    p_eval.set_defaults(handler=run_eval)

    p_cls = sub.add_parser(
        "classify", parents=[common], help="classify every declared event"
    )
    p_cls.add_argument("file", help="program file, or - for stdin")
    p_cls.set_defaults(handler=run_classify)

    p_worlds = sub.add_parser(
        "worlds", parents=[common], help="value statements against a world table"
    )
    p_worlds.add_argument("file", help="JSON world table, or - for stdin")
    p_worlds.set_defaults(handler=run_worlds)

    p_check = sub.add_parser(
        "check", parents=[common], help="run the brute-force self-checks"
    )
    p_check.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p_check.add_argument(
        "--cases", type=int, default=1000, help="random set pairs to try (default 1000)"
    )
    p_check.set_defaults(handler=run_check)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args, sys.stdout, sys.stderr)


def entry() -> None:
    raise SystemExit(main())
