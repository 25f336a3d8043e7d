"""Command-line front-end: ``check``, ``eval`` and ``describe``.

Exit codes: 0 all checks pass, 1 a suite failure, 2 invalid input or config.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import ConfigError, read_context
from .expr import ExprError, evaluate, machine_form, render
from .foundations import AlgebraError
from .suites import DEFAULT_CASES, DEFAULT_SEED, SUITES, reports_json, run_suites


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfcurrents", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser("check", help="run property suites on a context")
    check.add_argument("--config", required=True, help="JSON context file or builtin:C1..C4")
    check.add_argument("--suite", action="append", choices=SUITES, metavar="NAME",
                       help=f"suite to run (repeatable; default all): {', '.join(SUITES)}")
    check.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check.add_argument("--cases", type=int, default=DEFAULT_CASES)
    check.add_argument("--json", action="store_true", help="print the JSON report")
    check.add_argument("--timing", action="store_true", help="include wall time (breaks byte identity)")

    ev = sub.add_parser("eval", help="evaluate an expression to canonical form")
    ev.add_argument("--config", required=True)
    ev.add_argument("--expr", required=True)
    ev.add_argument("--json", action="store_true", help="print the machine form as JSON")

    desc = sub.add_parser("describe", help="print the validated context summary")
    desc.add_argument("--config", required=True)
    return parser


def _check(args) -> int:
    if args.cases < 1:
        print("error: --cases must be positive", file=sys.stderr)
        return 2
    ctx = read_context(args.config)
    reports = run_suites(ctx, args.suite, seed=args.seed, cases=args.cases)
    if args.json:
        sys.stdout.write(reports_json(reports, timing=args.timing))
    else:
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.context} {r.suite}: {sum(r.checks.values())} checks, {r.failure_count} failures"
            if args.timing:
                line += f" ({r.wall_time:.2f}s)"
            print(line)
            for f in r.failures:
                print(f"  {f.identity}: {f.expression}")
                print(f"    = {f.value}")
            for w in r.witnesses:
                if "expression" in w:
                    print(f"  witness {w['identity']}: {w['expression']}")
                    print(f"    = {w['value']}")
                elif w.get("identity") == "lift-boundary-square":
                    print(f"  witness {w['identity']}: none ({w['note']})")
        print(f"seed {args.seed}, {args.cases} cases")
    return 0 if all(r.ok for r in reports) else 1


def _eval(args) -> int:
    ctx = read_context(args.config)
    value = evaluate(args.expr, ctx)
    if args.json:
        print(json.dumps({"text": render(value), "value": machine_form(value, ctx)}, sort_keys=True))
    else:
        print(render(value))
    return 0


def _describe(args) -> int:
    ctx = read_context(args.config)
    print(json.dumps(ctx.describe(), indent=2, sort_keys=True))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"check": _check, "eval": _eval, "describe": _describe}[args.command]
    try:
        return handler(args)
    except (ConfigError, ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
