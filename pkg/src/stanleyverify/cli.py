"""Command-line entry point: ``stanleyverify <subcommand> ...``.

Exit status is 0 on success, 1 when a verification campaign reports
failures and 2 on any usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .campaigns import verify
from .counting import build_count_table
from .errors import StanleyError
from .partitions import Partition, enumerate_partitions
from .report import DEFAULT_BIJECTION_CAP, DEFAULT_ENUM_CAP, FORMATS, IDENTITIES, ORACLE_MODES, CampaignConfig
from .stats import a_sum, distinct_sum_formula, division_schedule, occurrences_formula
from .tiling import MAPS, measure_exponent, partition_from_tiling, tiling_from_partition

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad partition {text!r}: expected comma-separated integers")
    if any(x < 1 for x in parts):
        raise UsageError(f"bad partition {text!r}: parts must be positive")
    return Partition.of(parts)


def _parse_params(text: str) -> dict[str, int]:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad parameter {item!r}: expected name=value")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"bad parameter {item!r}: value must be an integer")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stanleyverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pfunc", help="print n,P(n) for 0 <= n <= max")
    p.add_argument("--max", type=_nonneg, required=True, dest="max_n")

    p = sub.add_parser("enumerate", help="list partitions of n, one per line")
    p.add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("stats", help="division schedule, Q_k window, A(n) and B(n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--probe-beyond-k", action="store_true", help="allow k > n")

    p = sub.add_parser("bijection", help="apply one tiling map to a partition")
    p.add_argument("--map", choices=sorted(MAPS), required=True, dest="map_name")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 3,1,1")
    p.add_argument("--params", required=True, help="e.g. r=2,i=3")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--identity", choices=IDENTITIES, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--probe-beyond-k", action="store_true")
    p.add_argument("--oracle", choices=ORACLE_MODES, default="cross-check")
    p.add_argument("--format", choices=FORMATS, default="json", dest="fmt")
    p.add_argument("--enum-cap", type=_nonneg, default=DEFAULT_ENUM_CAP,
                   help="largest weight whose partitions may be enumerated")
    p.add_argument("--bijection-cap", type=_nonneg, default=DEFAULT_BIJECTION_CAP,
                   help="largest n for which tiling maps are applied slice by slice")
    p.add_argument("--jobs", type=_nonneg, default=1, help="worker processes, 0 = one per CPU")

    p = sub.add_parser("bench", help="time count-table build and a theorem1 campaign")
    p.add_argument("--max", type=_positive, required=True, dest="max_n")
    return parser


def _cmd_pfunc(args: argparse.Namespace) -> int:
    table = build_count_table(args.max_n)
    for n, value in enumerate(table):
        print(f"{n},{value}")
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for p in enumerate_partitions(args.n):
        print(p)
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    if k > n and not args.probe_beyond_k:
        raise UsageError(f"k={k} exceeds n={n}; pass --probe-beyond-k to evaluate anyway")
    table = build_count_table(n + k)
    out: dict[str, object] = {"n": n, "k": k}
    if k <= n:
        sched = division_schedule(n, k)
        out["schedule"] = {"q": sched.q, "r": sched.r, "s": sched.s}
    out["Q"] = {str(n + i): str(occurrences_formula(k, n + i, table)) for i in range(k)}
    a = a_sum(n, k, table, probe=args.probe_beyond_k)
    b = distinct_sum_formula(n, table)
    out["A"] = str(a)
    out["B"] = str(b)
    out["equal"] = a == b
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_bijection(args: argparse.Namespace) -> int:
    fn, names = MAPS[args.map_name]
    params = _parse_params(args.params)
    if set(params) != set(names):
        raise UsageError(
            f"map {args.map_name} takes parameters {','.join(names)}, got {','.join(params) or 'none'}"
        )
    source = _parse_parts(args.partition)
    t = tiling_from_partition(source)
    u = fn(t, *(params[name] for name in names))
    print(f"input: {source}")
    print(f"output: {partition_from_tiling(u)}")
    print(f"exponent_delta: {measure_exponent(u) - measure_exponent(t)}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = CampaignConfig(
        n_max=args.n_max,
        probe_beyond_k=args.probe_beyond_k,
        oracle_mode=args.oracle,
        output_format=args.fmt,
        parallelism=args.jobs,
        enum_cap=args.enum_cap,
        bijection_cap=args.bijection_cap,
    )
    report = verify(args.identity, cfg)
    sys.stdout.write(report.render(cfg.output_format))
    if cfg.output_format == "json":
        sys.stdout.write("\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_bench(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    build_count_table(args.max_n)
    table_ms = (time.perf_counter() - start) * 1000
    report = verify("theorem1", CampaignConfig(n_max=args.max_n, oracle_mode="formula-only"))
    print(json.dumps({
        "max_n": args.max_n,
        "count_table_ms": round(table_ms, 3),
        "theorem1_ms": report.elapsed_ms,
        "theorem1_cells": report.cells_checked,
        "theorem1_passed": report.passed,
    }, indent=2))
    return EXIT_OK if report.passed else EXIT_FAILED


_COMMANDS = {
    "pfunc": _cmd_pfunc,
    "enumerate": _cmd_enumerate,
    "stats": _cmd_stats,
    "bijection": _cmd_bijection,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except StanleyError as exc:
        print(f"stanleyverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
