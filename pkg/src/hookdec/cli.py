"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 precondition violation, 4 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from . import cache, hooks, verify
from .errors import HookdecError, InvalidPartition, ResourceLimit
from .lr import lr_coefficient
from .partitions import Partition, format_partition, parse_partition

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4

RECT_MAX_N = 6
SQUARE_MAX_N = 4


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except InvalidPartition as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def table_to_json(table: hooks.MultiplicityTable) -> str:
    entries = []
    for key, mult in table.items():
        if table.context["kind"] == "rect":
            lam, mu = key
            entries.append({"lambda": format_partition(lam), "mu": format_partition(mu), "mult": mult})
        else:
            entries.append({"lambda": format_partition(key), "mult": mult})
    return json.dumps({"context": dict(table.context), "entries": entries}, indent=2) + "\n"


def table_from_json(text: str) -> hooks.MultiplicityTable:
    """Inverse of :func:`table_to_json`."""
    payload = json.loads(text)
    context = payload["context"]
    entries = {}
    for row in payload["entries"]:
        lam = parse_partition(row["lambda"])
        key = (lam, parse_partition(row["mu"])) if "mu" in row else lam
        entries[key] = int(row["mult"])
    return hooks.MultiplicityTable(context, entries)


def table_to_tsv(table: hooks.MultiplicityTable) -> str:
    rect = table.context["kind"] == "rect"
    lines = ["lambda\tmu\tmult" if rect else "lambda\tmult"]
    for key, mult in table.items():
        if rect:
            lines.append(f"{format_partition(key[0])}\t{format_partition(key[1])}\t{mult}")
        else:
            lines.append(f"{format_partition(key)}\t{mult}")
    return "\n".join(lines) + "\n"


def _cap(n: int, default: int, unsafe: int | None) -> None:
    limit = unsafe if unsafe is not None else default
    if n > limit:
        raise ResourceLimit(f"n={n} exceeds cap {limit}; pass --unsafe-max-n to override")


def cmd_lr(args, out: TextIO) -> int:
    print(lr_coefficient(args.lam, args.mu, args.nu), file=out)
    return EXIT_OK


def cmd_mult(args, out: TextIO) -> int:
    lam = args.lam
    if args.t is None:
        raise HookdecError("--t is required")
    if args.kind == "rect":
        if args.mu is None:
            raise HookdecError("--mu is required for --kind rect")
        _cap(lam.size, RECT_MAX_N, args.unsafe_max_n)
        value = hooks.mult_rect(lam, args.mu, args.t)
    else:
        _cap(lam.size // 2, SQUARE_MAX_N, args.unsafe_max_n)
        if args.kind == "square":
            value = hooks.mult_hook_square(lam, args.t)
        else:
            if args.j is None:
                raise HookdecError("--j is required for --kind square-graded")
            value = hooks.mult_hook_square_graded(lam, args.t, args.j)
    print(value, file=out)
    return EXIT_OK


def cmd_table(args, out: TextIO) -> int:
    if args.kind == "rect":
        if args.k is None or args.m is None:
            raise HookdecError("--k and --m are required for rectangular tables")
        _cap(args.n, RECT_MAX_N, args.unsafe_max_n)
        table = hooks.mult_rect_table(args.n, args.k, args.m, args.t, cap=None)
    else:
        _cap(args.n, SQUARE_MAX_N, args.unsafe_max_n)
        table = hooks.mult_square_table(args.n, args.k, args.t, args.j, cap=None)
    text = table_to_json(table) if args.format == "json" else table_to_tsv(table)
    out.write(text)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if os.environ.get(cache.ENV_VAR):
        for n in range(1, 2 * min(args.max_n, SQUARE_MAX_N) + 1):
            cache.load_or_build(n)
    passed = failed = 0
    for name, ok in verify.run(args.suite, args.max_n, args.unsafe_max_n):
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=out, flush=True)
        passed += ok
        failed += not ok
    print(f"{passed} passed, {failed} failed", file=out)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookdec",
        description="Multiplicities in hook components of tensor powers of matrix spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lambda_{mu,nu}")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("mult", help="a single multiplicity")
    p.add_argument("--kind", choices=("rect", "square", "square-graded"), default="rect")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg)
    p.add_argument("--t", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--unsafe-max-n", type=int)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("table", help="all nonzero multiplicities for one hook component")
    p.add_argument("--kind", choices=("rect", "square"), default="rect")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--j", type=int, help="skew-symmetric grading (square tables only)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--unsafe-max-n", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the formula-vs-oracle verification suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--unsafe-max-n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InvalidPartition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except HookdecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
