"""Command-line front end.

Subcommands: search, sweep, verify, bound, export, scan.  Result
documents (CSV by default, JSON lines with --format json) go to stdout
or the --out file; progress lines go to stderr so the two never mix.
Exit status is 0 only when the operation completed, and for verify only
when every selected row passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import IO, Sequence

from . import catalog as catalog_mod
from . import oracle as oracle_mod
from .numbertheory import DEFAULT_SIEVE_BOUND
from .partition import build_partition
from .search import (
    DEFAULT_SWEEP_BOUNDS,
    SEARCH_CSV_HEADER,
    SearchRecord,
    ramsey_recursive_bound,
    records_from_csv,
    records_from_jsonl,
    search_all,
    sweep_nonexistence,
)

WORKERS_ENV = "RAMSEY_FORGE_WORKERS"
ORACLE_NAIVE_CAP = 2000

VERIFY_CSV_HEADER = (
    "m,N,x,generator_ok,symmetric,sum_free,cyclic_basis,triangle,"
    "overall,minimal_ok,passed,elapsed_ms"
)
SCAN_CSV_HEADER = (
    "N,m,x,fast_symmetric,fast_sum_free,fast_cyclic_basis,fast_triangle,"
    "fast_overall,naive_overall,agree"
)


def _flag(v: bool | None) -> str:
    return "" if v is None else ("true" if v else "false")


def _parse_m_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty m range {text!r}")
    return lo, hi


def _resolve_workers(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


class _Progress:
    """Rate-limited status lines on stderr; interval 0 or --quiet silences."""

    def __init__(self, label: str, interval: float, quiet: bool):
        self.label = label
        self.interval = interval
        self.quiet = quiet or interval <= 0
        self.last = time.monotonic()

    def __call__(self, m: int, N: int, tested: int) -> None:
        if self.quiet:
            return
        now = time.monotonic()
        if now - self.last >= self.interval:
            self.last = now
            print(f"{self.label}: m={m} N={N} tested={tested}", file=sys.stderr)


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="ascii", newline=""), True


def _emit(sink: IO[str], line: str) -> None:
    sink.write(line + "\n")
    sink.flush()


def _cmd_search(args) -> int:
    lo, hi = args.m
    if lo < 2:
        print(f"error: search needs m >= 2, got {lo}", file=sys.stderr)
        return 1
    workers = _resolve_workers(args.workers)
    progress = _Progress("search", args.progress_interval, args.quiet)

    resume_records: list[SearchRecord] = []
    if args.resume and args.out and os.path.exists(args.out):
        text = open(args.out, encoding="ascii").read()
        parse = records_from_csv if args.format == "csv" else records_from_jsonl
        try:
            resume_records = parse(text)
        except (ValueError, KeyError, json.JSONDecodeError) as e:
            print(f"error: cannot resume from {args.out}: {e}", file=sys.stderr)
            return 1

    sink, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _emit(sink, SEARCH_CSV_HEADER)
            emit = lambda r: _emit(sink, r.to_csv_row())
        else:
            emit = lambda r: _emit(sink, json.dumps(r.to_dict(), separators=(",", ":")))
        records = search_all(
            lo, hi, args.bound,
            workers=workers, method=args.method,
            progress=progress, resume_records=resume_records, on_record=emit,
        )
    finally:
        if close:
            sink.close()

    if args.oracle:
        for r in records:
            if r.status == "found" and r.N is not None and r.N <= ORACLE_NAIVE_CAP:
                p = build_partition(r.N, r.m, r.x)
                rep = oracle_mod.naive_check(p)
                if not rep.overall:
                    print(
                        f"oracle disagreement at m={r.m} N={r.N}: {rep.to_json()}",
                        file=sys.stderr,
                    )
                    return 1
                if not args.quiet:
                    print(f"oracle confirmed m={r.m} N={r.N}", file=sys.stderr)
    return 0


def _cmd_sweep(args) -> int:
    bound = args.bound
    if bound is None:
        if args.m not in DEFAULT_SWEEP_BOUNDS:
            print(
                f"error: no default bound for m={args.m}; pass --bound",
                file=sys.stderr,
            )
            return 1
        bound = DEFAULT_SWEEP_BOUNDS[args.m]
    workers = _resolve_workers(args.workers)
    progress = _Progress("sweep", args.progress_interval, args.quiet)
    try:
        result = sweep_nonexistence(
            args.m, bound, workers=workers, method=args.method, progress=progress
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    sink, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _emit(sink, SEARCH_CSV_HEADER)
            _emit(sink, result.record.to_csv_row())
        else:
            _emit(sink, json.dumps(result.record.to_dict(), separators=(",", ":")))
    finally:
        if close:
            sink.close()

    if args.failures:
        with open(args.failures, "w", encoding="ascii", newline="") as f:
            for fail in result.failures:
                f.write(fail.to_json() + "\n")
    if not args.quiet:
        print(
            f"sweep m={args.m}: {result.record.status}, "
            f"{result.record.candidates_tested} candidates, "
            f"{len(result.failures)} failures logged",
            file=sys.stderr,
        )
    return 0


def _cmd_verify(args) -> int:
    try:
        rows = catalog_mod.load_catalog()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if not args.all:
        if args.m is None:
            print("error: pass --all or --m <range>", file=sys.stderr)
            return 1
        lo, hi = args.m
        rows = [r for r in rows if lo <= r.m <= hi]
        if not rows:
            print(f"error: no catalog rows with m in {lo}..{hi}", file=sys.stderr)
            return 1
    progress = _Progress("verify", args.progress_interval, args.quiet)
    results = catalog_mod.verify_rows(
        rows, minimality=args.minimality, method=args.method, progress=progress
    )

    sink, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _emit(sink, VERIFY_CSV_HEADER)
            for v in results:
                rep = v.report
                _emit(
                    sink,
                    f"{v.row.m},{v.row.N},{v.row.x},{_flag(v.generator_ok)},"
                    f"{_flag(rep.symmetric)},{_flag(rep.sum_free)},"
                    f"{_flag(rep.cyclic_basis)},{_flag(rep.triangle)},"
                    f"{_flag(rep.overall)},{_flag(v.minimal_ok)},"
                    f"{_flag(v.passed)},{v.elapsed_ms:.3f}",
                )
        else:
            for v in results:
                _emit(sink, json.dumps(v.to_dict(), separators=(",", ":")))
    finally:
        if close:
            sink.close()

    failed = [v for v in results if not v.passed]
    if failed:
        for v in failed:
            print(f"verify FAILED at m={v.row.m} N={v.row.N}", file=sys.stderr)
        return 1
    if not args.quiet:
        print(f"verify: all {len(results)} rows passed", file=sys.stderr)
    return 0


def _cmd_bound(args) -> int:
    try:
        print(ramsey_recursive_bound(args.colors))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def _cmd_export(args) -> int:
    try:
        p = build_partition(args.N, args.m, args.x)
        doc = catalog_mod.export_coloring(p, args.format)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    sink, close = _open_out(args.out)
    try:
        sink.write(doc)
        sink.flush()
    finally:
        if close:
            sink.close()
    return 0


def _cmd_scan(args) -> int:
    try:
        records = oracle_mod.exhaustive_small_scan(args.nmax)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    sink, close = _open_out(args.out)
    try:
        if args.format == "csv":
            _emit(sink, SCAN_CSV_HEADER)
            for r in records:
                f = r.fast
                _emit(
                    sink,
                    f"{r.N},{r.m},{r.x},{_flag(f.symmetric)},{_flag(f.sum_free)},"
                    f"{_flag(f.cyclic_basis)},{_flag(f.triangle)},"
                    f"{_flag(f.overall)},{_flag(r.naive.overall)},{_flag(r.agree)}",
                )
        else:
            for r in records:
                _emit(sink, json.dumps(r.to_dict(), separators=(",", ":")))
    finally:
        if close:
            sink.close()
    disagree = [r for r in records if not r.agree]
    if disagree:
        for r in disagree:
            print(f"checker disagreement at N={r.N} m={r.m}", file=sys.stderr)
        return 1
    return 0


def _add_common(sp, *, workers: bool = True) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", metavar="PATH")
    sp.add_argument("--quiet", "-q", action="store_true")
    sp.add_argument("--progress-interval", type=float, default=10.0, metavar="SEC")
    sp.add_argument(
        "--method", choices=("auto", "bitset", "counting"), default="auto"
    )
    if workers:
        sp.add_argument("--workers", type=int, metavar="W")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramsey-forge",
        description="Search and verify symmetric sum-free cyclic multi-bases.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("search", help="least passing modulus per color count")
    sp.add_argument("--m", type=_parse_m_range, required=True, metavar="A..B")
    sp.add_argument("--bound", type=int, default=DEFAULT_SIEVE_BOUND, metavar="B")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--resume", action="store_true")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("sweep", help="exhaust all candidates up to a bound")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--bound", type=int, default=None, metavar="B")
    sp.add_argument("--failures", metavar="PATH")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("verify", help="re-derive catalog rows")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--m", type=_parse_m_range, default=None, metavar="A..B")
    sp.add_argument("--minimality", action="store_true")
    _add_common(sp, workers=False)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("bound", help="recursive multicolor Ramsey bound")
    sp.add_argument("--colors", type=int, required=True)
    sp.set_defaults(fn=_cmd_bound)

    sp = sub.add_parser("export", help="emit an edge coloring as DOT or JSON")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--format", choices=("dot", "json"), required=True)
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(fn=_cmd_export)

    sp = sub.add_parser("scan", help="cross-check both checkers on small moduli")
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(fn=_cmd_scan)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
