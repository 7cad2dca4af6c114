"""Command line interface: ``nccgraph {propagate,solve,check,gen}``.

Exit codes: 0 success / satisfiable, 1 proven inconsistent or failed check,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .certify import check_instance
from .engine import propagate_fixpoint, solve
from .generate import generate_instance
from .instance import Instance, InstanceError, dumps, parse_instance, serialize_instance
from .oracle import DEFAULT_CAP, InstanceTooLarge

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str) -> Instance:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_instance(text)


def cmd_propagate(args) -> int:
    inst = _load(args.file)
    g = inst.to_domain()
    cons = inst.constraint_specs()
    res = propagate_fixpoint(g, cons)
    if res.failed:
        report = {
            "result": "FAIL",
            "failed_constraint": res.failed_constraint,
            "failed_step": res.failed_step,
            "rounds": res.rounds,
        }
        sys.stdout.write(dumps(report))
        return EXIT_FAIL
    report = {"result": "STABLE", "rounds": res.rounds, **Instance.from_domain(g, cons).to_dict()}
    sys.stdout.write(dumps(report))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load(args.file)
    g = inst.to_domain()
    cons = inst.constraint_specs()
    limit = None if args.all else args.limit
    sols = solve(g, cons, limit=limit)
    report = {
        "result": "SAT" if sols else "UNSAT",
        "count": len(sols),
        "solutions": [
            {
                "vertices": list(s.vertices),
                "arcs": [{"from": t, "to": h} for t, h in s.arcs],
                "p": [{"type": c.kind.value, "value": val} for c, val in zip(cons, s.p_values)],
            }
            for s in sols
        ],
    }
    sys.stdout.write(dumps(report))
    return EXIT_OK if sols else EXIT_FAIL


def cmd_check(args) -> int:
    inst = _load(args.file)
    results = check_instance(inst, args.cap)
    ok = all(not v for _, v in results)
    report = {
        "result": "PASS" if ok else "FAIL",
        "checks": [
            {"name": name, "result": "FAIL" if v else "PASS", "violations": v} for name, v in results
        ],
    }
    sys.stdout.write(dumps(report))
    return EXIT_OK if ok else EXIT_FAIL


def _interval(text: str) -> tuple[int, int]:
    try:
        lb, ub = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LB,UB, got {text!r}") from None
    return lb, ub


def cmd_gen(args) -> int:
    cons = [("min_ncc", *iv) for iv in args.min_ncc] + [("max_ncc", *iv) for iv in args.max_ncc]
    inst = generate_instance(
        args.n,
        args.density,
        args.mandatory_ratio,
        args.seed,
        excluded_ratio=args.excluded_ratio,
        kernel_arc_prob=args.kernel_arc_prob,
        loop_density=args.loop_density,
        constraints=cons,
    )
    sys.stdout.write(serialize_instance(inst))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nccgraph", description="MIN_NCC / MAX_NCC propagation over graph domain variables")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("propagate", help="run propagation to a fixpoint and print the narrowed instance")
    p.add_argument("file", help="instance file, '-' for stdin")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("solve", help="enumerate solutions in branch order")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--limit", type=int, default=None, metavar="N", help="stop after N solutions")
    group.add_argument("--all", action="store_true", help="enumerate every solution (default)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="compare bounds, propagators and solver with the brute-force oracle")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="K", help="maximum free elements to enumerate")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit a seeded random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--mandatory-ratio", type=float, default=0.3)
    p.add_argument("--excluded-ratio", type=float, default=0.0)
    p.add_argument("--kernel-arc-prob", type=float, default=0.5)
    p.add_argument("--loop-density", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-ncc", type=_interval, action="append", default=[], metavar="LB,UB")
    p.add_argument("--max-ncc", type=_interval, action="append", default=[], metavar="LB,UB")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InstanceError, InstanceTooLarge, ValueError, OSError) as exc:
        print(f"nccgraph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_cli(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
