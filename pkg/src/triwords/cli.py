"""Command-line interface: compute, table, bfile, validate, bench.

Exit status is 0 on success, 1 when a validation check fails, and 2 for
usage errors (bad flags, out-of-domain requests).  All values print in
full decimal so outputs can be diffed bit-for-bit.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys

from .counting import ClassLabel, TooLarge
from .engines import (
    ENGINE_IDS,
    ENGINES,
    EngineDomainError,
    bench_engine,
    compute_series,
    compute_value,
    decimal_digits,
    run_validation,
)

USAGE_ERROR = 2

# OEIS b-files are emitted for these entries (classes A, B, C in order).
OEIS_SEQUENCES = {
    "A391468": ClassLabel.A,
    "A391469": ClassLabel.B,
    "A391470": ClassLabel.C,
}


class UnknownSequence(ValueError):
    """Requested OEIS id is not one of the three emitted sequences."""


def bfile_lines(sequence: str, max_n: int, offset: int = 1) -> list[str]:
    """The "index value" lines of the b-file for one OEIS id.

    Values come from the decoupled engine; the index runs from `offset`
    (default 1, matching initial values that start at n = 1) to max_n.
    """
    if sequence not in OEIS_SEQUENCES:
        raise UnknownSequence(f"unknown sequence {sequence!r}; known: {', '.join(OEIS_SEQUENCES)}")
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if offset < 0 or offset > max_n:
        raise ValueError(f"offset must be in 0..max_n, got {offset}")
    label = OEIS_SEQUENCES[sequence]
    return [f"{n} {compute_value('decoupled', label, n)}" for n in range(offset, max_n + 1)]


def _table_rows(engine: str, max_n: int) -> list[dict[str, int]]:
    series = compute_series(engine, max_n)
    return [
        {"n": v.n, "C_A": v.a, "C_B": v.b, "C_C": v.c, "C_D": v.d, "total": v.total}
        for v in series
    ]


def _print_aligned(rows: list[dict[str, int]]) -> None:
    headers = ["n", "C_A", "C_B", "C_C", "C_D", "total"]
    widths = {h: max(len(h), *(len(str(r[h])) for r in rows)) for h in headers}
    print("  ".join(h.rjust(widths[h]) for h in headers))
    for r in rows:
        print("  ".join(str(r[h]).rjust(widths[h]) for h in headers))


def _cmd_compute(args) -> int:
    value = compute_value(args.engine, ClassLabel(args.cls), args.n)
    print(value)
    return 0


def _cmd_table(args) -> int:
    rows = _table_rows(args.engine, args.max_n)
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "C_A", "C_B", "C_C", "C_D", "total"])
        for r in rows:
            writer.writerow([r["n"], r["C_A"], r["C_B"], r["C_C"], r["C_D"], r["total"]])
        sys.stdout.write(out.getvalue())
    elif args.format == "json":
        print(json.dumps({"engine": args.engine, "max_n": args.max_n, "rows": rows}, indent=2))
    else:
        _print_aligned(rows)
    return 0


def _cmd_bfile(args) -> int:
    for line in bfile_lines(args.sequence, args.max_n, args.offset):
        print(line)
    return 0


def _cmd_validate(args) -> int:
    results = sorted(run_validation(args.max_n), key=lambda r: r.name)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += not r.passed
        print(f"{status}  {r.name}: {r.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed (max_n = {args.max_n})")
    return 0 if failures == 0 else 1


def _value_column(values: dict[ClassLabel, int]) -> str:
    rendered = ",".join(f"{label.value}={v}" for label, v in sorted(values.items(), key=lambda kv: kv[0].value))
    if len(rendered) <= 60:
        return rendered
    joined = ",".join(str(v) for _, v in sorted(values.items(), key=lambda kv: kv[0].value))
    return "blake2b:" + hashlib.blake2b(joined.encode(), digest_size=8).hexdigest()


def _cmd_bench(args) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    if not engines:
        raise EngineDomainError("no engines given")
    for engine in engines:
        if engine not in ENGINES:
            raise EngineDomainError(f"unknown engine {engine!r}; known: {', '.join(ENGINE_IDS)}")
    print(f"{'engine':<12} {'seconds':>10} {'digits':>8}  values")
    for engine in engines:
        elapsed, values = bench_engine(engine, args.max_n)
        digits = sum(decimal_digits(v) for v in values.values())
        print(f"{engine:<12} {elapsed:>10.4f} {digits:>8}  {_value_column(values)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triwords",
        description="Exact counts of 3n-letter words over a three-letter alphabet by residue class.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one class count at one index")
    p.add_argument("--class", dest="cls", required=True, choices=[l.value for l in ClassLabel])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", default="decoupled", choices=ENGINE_IDS)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("table", help="all four classes and the total for n = 0..max_n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--engine", default="decoupled", choices=ENGINE_IDS)
    p.add_argument("--format", default="table", choices=["table", "csv", "json"])
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bfile", help="emit an OEIS b-file (index value lines)")
    p.add_argument("sequence", choices=sorted(OEIS_SEQUENCES))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--offset", type=int, default=1, help="first emitted index (default 1)")
    p.set_defaults(func=_cmd_bfile)

    p = sub.add_parser("validate", help="run all cross-engine and identity checks")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("bench", help="time engines computing all their classes at n = max_n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--engines", required=True, help="comma-separated engine ids")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    # Values grow past CPython's default int-to-str conversion cap (4300
    # digits) long before the engines slow down; printing in full decimal
    # is part of the contract, so lift the cap for this process.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EngineDomainError, UnknownSequence, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
