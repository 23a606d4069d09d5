"""Command-line front end.

    mismatch --exponents 1,2 normalize "B2 t"
    mismatch --exponents 1,2 wp "B1 t b1 T A"
    mismatch --exponents 1,2 fellow --mode async --lhs "B2 a^3 t" --rhs "a^2 t B2 a^3"

Exit status: 0 on success, 1 on domain errors (a single JSON error record is
written to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .automata import EnumerationLimitExceeded, accepts, build_acceptor, export_automaton
from .cayley import BallBudgetExceeded, build_ball, export_ball
from .experiments import (
    combing_sweep,
    conjugation_check,
    quasi_rows_csv,
    quasi_rows_json,
    quasigeodesic_table,
    twist_check,
)
from .fellow import async_fellow_distance, sync_fellow_distance
from .presentation import GroupSpec, WordParseError, letter_name, parse_word
from .rewrite import normalize, nf_to_dict, rewrite_trace, word_problem

# Fallbacks applied after the config file; flags always win.
DEFAULTS = {
    "seed": 0,
    "radius": 8,
    "max_entries": 5_000_000,
    "cap": None,
    "samples": 2000,
    "maxlen": 20,
    "stable": 1,
    "kmax": 5,
    "jmax": 5,
    "verify_radius": 7,
    "pmax": 20,
    "mode": "async",
}


class DomainError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mismatch",
        description="Normal forms and fellow-traveller checks for <a,t,b1..bk | at=ta, Bi t bi = a^ni t>.",
    )
    parser.add_argument("--exponents", help="comma separated n1,...,nk")
    parser.add_argument("--config", help="JSON file with the same fields; flags override it")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("normalize", help="normal form of a word")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="include the rewrite trace")

    p = sub.add_parser("wp", help="decide whether a word is the identity")
    p.add_argument("word")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("member", help="membership in the normal-form language")
    p.add_argument("word")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("dfa", help="export the normal-form acceptor")
    p.add_argument("--export", choices=["dot", "json"], default="json")

    p = sub.add_parser("ball", help="BFS ball of the Cayley graph")
    p.add_argument("--radius", type=int)
    p.add_argument("--max-entries", type=int)
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")

    p = sub.add_parser("fellow", help="fellow-traveller distance between two word paths")
    p.add_argument("--mode", choices=["sync", "async"])
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("combing-check", help="sample normal forms and measure the combing constant")
    p.add_argument("--samples", type=int)
    p.add_argument("--maxlen", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--cap", type=int)

    p = sub.add_parser("quasigeodesic", help="normal-form length of Bi^k t^j")
    p.add_argument("--stable", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--verify-radius", type=int)
    p.add_argument("--max-entries", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("conjugation-check", help="check Bi^p t bi^p = a^(p ni) t, or the t-twist law")
    p.add_argument("--pmax", type=int)
    p.add_argument(
        "--law",
        choices=["stable", "twist"],
        default="stable",
        help="stable: Bi^p t bi^p = a^(p ni) t; twist: t^p bi t^-p = bi a^(p ni)",
    )
    p.add_argument("--format", choices=["json", "csv"], default="json")
    return parser


def resolve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> argparse.Namespace:
    config = {}
    if args.config:
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {args.config}: {exc}")
    for key, value in vars(args).items():
        if value is None and key in config:
            setattr(args, key, config[key])
    for key, value in DEFAULTS.items():
        if getattr(args, key, value) is None:
            setattr(args, key, value)
    exps = args.exponents
    if exps is None:
        parser.error("--exponents is required (or give exponents in --config)")
    try:
        args.spec = GroupSpec.from_flag(exps) if isinstance(exps, str) else GroupSpec(tuple(exps))
    except ValueError as exc:
        parser.error(str(exc))
    for key in ("radius", "max_entries", "samples", "maxlen", "kmax", "jmax", "pmax"):
        value = getattr(args, key, None)
        if value is not None and value < (0 if key == "radius" else 1):
            parser.error(f"--{key.replace('_', '-')} must be positive")
    return args


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def run(args: argparse.Namespace) -> str:
    spec = args.spec
    cmd = args.command
    if cmd == "normalize":
        w = parse_word(spec, args.word)
        out = nf_to_dict(normalize(spec, w))
        if args.trace:
            out["trace"] = [
                {
                    "kind": s.kind,
                    "position": s.position,
                    "before": [letter_name(x) for x in s.before],
                    "after": [letter_name(x) for x in s.after],
                }
                for s in rewrite_trace(spec, w)
            ]
        return _dump(out)
    if cmd == "wp":
        result = "identity" if word_problem(spec, parse_word(spec, args.word)) else "non-identity"
        return _dump({"word": args.word, "result": result}) if args.format == "json" else result
    if cmd == "member":
        ok = accepts(build_acceptor(spec), parse_word(spec, args.word))
        result = "accept" if ok else "reject"
        return _dump({"word": args.word, "result": result}) if args.format == "json" else result
    if cmd == "dfa":
        return export_automaton(build_acceptor(spec), args.export).rstrip("\n")
    if cmd == "ball":
        ball = build_ball(spec, args.radius, args.max_entries)
        return export_ball(ball, args.format).rstrip("\n")
    if cmd == "fellow":
        lhs, rhs = parse_word(spec, args.lhs), parse_word(spec, args.rhs)
        cap = args.cap if args.cap is not None else max(abs(n) for n in spec.exponents) + 2
        if cap < 0:
            raise DomainError("cap must be non-negative")
        out = {"mode": args.mode, "cap": cap, "value": None, "exceeds_cap": True}
        if args.mode == "sync":
            value = sync_fellow_distance(spec, lhs, rhs, cap)
            if isinstance(value, int):
                out.update(value=value, exceeds_cap=False)
        else:
            result = async_fellow_distance(spec, lhs, rhs, cap)
            out["alignment"] = None
            if isinstance(result, tuple):
                out.update(value=result[0], exceeds_cap=False, alignment=result[1].steps())
        return _dump(out)
    if cmd == "combing-check":
        report = combing_sweep(spec, args.samples, args.maxlen, args.seed, args.cap)
        return report.to_json()
    if cmd == "quasigeodesic":
        rows = quasigeodesic_table(
            spec, args.stable, args.kmax, args.jmax, args.verify_radius, args.max_entries
        )
        return (quasi_rows_csv(rows) if args.format == "csv" else quasi_rows_json(rows)).rstrip("\n")
    if cmd == "conjugation-check":
        check = conjugation_check if args.law == "stable" else twist_check
        table = check(spec, args.pmax)
        if args.format == "json":
            return _dump({"passed": all(r["passed"] for r in table), "rows": table})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(table[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(table)
        return buf.getvalue().rstrip("\n")
    raise AssertionError(cmd)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = resolve(parser, parser.parse_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = run(args)
    except (WordParseError, BallBudgetExceeded, EnumerationLimitExceeded, DomainError, ValueError) as exc:
        record = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, WordParseError):
            record.update(token=exc.token, position=exc.position)
        if isinstance(exc, BallBudgetExceeded):
            record["completed_radius"] = exc.completed_radius
        print(json.dumps(record), file=stderr)
        return 1
    print(text, file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
