"""Command-line interface: ``lacuna {seq,expand,verify,tile,bench}``."""
from __future__ import annotations

import argparse
import json
import sys

from . import bench, kernels, sweeps, tilings
from .errors import DomainError
from .lacunary import lucas_expand
from .seqcore import FIBONACCI, LUCAS, PELL, gibonacci, term

SEQUENCES = ("fib", "lucas", "pell", "gibonacci")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    p = argparse.ArgumentParser(prog="lacuna", parents=[common],
                                description="Exact Lucas/Fibonacci/Pell lacunary recurrences.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[common], help="print a sequence term")
    s.add_argument("sequence", choices=SEQUENCES)
    s.add_argument("n", type=int)
    s.add_argument("--g0", type=int, default=None)
    s.add_argument("--g1", type=int, default=None)

    s = sub.add_parser("expand", parents=[common], help="lacunary expansion of L_n")
    s.add_argument("n", type=int)
    s.add_argument("--gap", "-N", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run an identity sweep")
    s.add_argument("suite", choices=list(sweeps.SUITES) + ["all"])
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--max-gap", type=int, default=None)
    s.add_argument("--paper-convention", action="store_true",
                   help="pell only: check the seeds P_0 = P_1 = 1 at (n=5, N=2)")

    s = sub.add_parser("tile", parents=[common], help="enumerate tilings")
    s.add_argument("kind", choices=("board", "bracelet", "partition"))
    s.add_argument("n", type=int)
    s.add_argument("--gap", "-N", type=int, default=None)

    s = sub.add_parser("bench", parents=[common], help="time evaluation strategies")
    s.add_argument("--strategies", default="all")
    s.add_argument("--n", type=_int_list, required=False, default=None)
    s.add_argument("--gap", "-N", type=int, default=0)
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--output", "-o", default=None, help="write CSV here; table goes to stdout")
    s.add_argument("--kernels", action="store_true",
                   help="compare the compiled and pure-Python enumeration kernels instead")
    return p


def _emit(obj, args) -> None:
    print(json.dumps(obj, indent=2) if args.json else obj)


def cmd_seq(args) -> int:
    specs = {"fib": FIBONACCI, "lucas": LUCAS, "pell": PELL}
    if args.sequence == "gibonacci":
        if args.g0 is None or args.g1 is None:
            raise DomainError("gibonacci needs --g0 and --g1")
        spec = gibonacci(args.g0, args.g1)
    else:
        spec = specs[args.sequence]
    value = term(spec, args.n)
    if args.json:
        _emit({"sequence": spec.name, "n": str(args.n), "value": str(value)}, args)
    else:
        print(value)
    return 0


def cmd_expand(args) -> int:
    e = lucas_expand(args.n, args.gap)
    if args.json:
        _emit(e.to_dict(), args)
    else:
        print(e.format())
    return 0


def cmd_verify(args) -> int:
    if args.paper_convention:
        if args.suite != "pell":
            raise DomainError("--paper-convention applies to the pell suite only")
        value, actual = sweeps.pell_as_printed_discrepancy()
        mismatch = value != actual
        if args.json:
            _emit({"suite": "pell-paper-convention", "n": "5", "N": "2", "formula": str(value),
                   "term": str(actual), "mismatch": mismatch}, args)
        else:
            print(f"pell with P_0=P_1=1 at n=5, N=2: formula {value} vs P_5 {actual} "
                  f"({'mismatch, as expected' if mismatch else 'unexpected agreement'})")
        return 0 if mismatch else 1

    results = sweeps.run_suite(args.suite, args.max_n, args.max_gap)
    if args.json:
        _emit({"results": [r.to_dict() for r in results], "ok": all(r.ok for r in results)}, args)
    else:
        for r in results:
            print(r.summary())
            for fail in r.failures:
                print("  failure:", fail)
        if len(results) > 1:
            print(f"passed {sum(r.passed for r in results)}/{sum(r.total for r in results)}")
    return 0 if all(r.ok for r in results) else 1


def cmd_tile(args) -> int:
    if args.kind == "partition":
        if args.gap is None:
            raise DomainError("tile partition needs --gap")
        rep = tilings.partition_bracelets(args.n, args.gap)
        if args.json:
            _emit({**rep.to_dict(), "checks": rep.checks()}, args)
        else:
            print(rep.format())
            for name, ok in rep.checks().items():
                print(f"  {'ok  ' if ok else 'FAIL'} {name}")
        return 0 if rep.ok else 1

    items = (tilings.enumerate_boards(args.n) if args.kind == "board"
             else tilings.enumerate_bracelets(args.n))
    if args.json:
        _emit({"kind": args.kind, "n": str(args.n), "count": str(len(items)),
               "tilings": [t.to_text() for t in items]}, args)
    else:
        if items:
            print(tilings.export_text(items))
        print(f"count={len(items)}")
    return 0


def cmd_bench(args) -> int:
    if args.kernels:
        sizes = args.n or [16, 20, 24]
        recs = bench.compare_kernels(sizes, args.reps)
        print(bench.format_table(("backend", "task", "n", "wall_time_ns", "result"),
                                 [(r.backend, r.task, r.n, r.wall_time_ns, r.result) for r in recs]))
        print(f"active backend: {kernels.active.BACKEND}")
        return 0
    if not args.n:
        raise DomainError("bench needs --n")
    records = bench.run_bench(bench.Strategy.parse(args.strategies), args.n, args.gap, args.reps)
    text = bench.records_to_csv(records)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
        print(bench.format_table(bench.CSV_HEADER, (r.row() for r in records)))
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {"seq": cmd_seq, "expand": cmd_expand, "verify": cmd_verify,
            "tile": cmd_tile, "bench": cmd_bench}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
