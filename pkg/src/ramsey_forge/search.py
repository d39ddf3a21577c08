"""Minimal-modulus search and nonexistence sweeps.

For a color count m the qualifying moduli are primes N = 1 (mod 2m);
`search_min_modulus` walks them in order and returns the first one whose
single-generator partition passes the full check, `sweep_nonexistence`
walks all of them and logs why each fails.

The economics: nearly every candidate dies on the sum-free condition,
so each one first runs an incremental screen that walks the class-0
subgroup and fires the moment two visited elements sum to 1.  The walk
usually aborts within a few hundred steps even when the class holds
tens of thousands of elements; only survivors pay for a full check.

Two runs with the same (m, bound) produce identical records whatever
the worker count: candidates are evaluated speculatively in blocks but
accounted strictly in candidate order.
"""

from __future__ import annotations

import json
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterable, Sequence

import numpy as np

from .checker import check_candidate
from .numbertheory import (
    DEFAULT_SIEVE_BOUND,
    PrimeSieve,
    prime_factors,
    sieve_primes,
    smallest_generator,
    _aux_sieve,
)
from .report import Witness

SEARCH_CSV_HEADER = "m,status,N,x,bound_used,candidates_tested,elapsed_ms"

PROGRESS_STRIDE = 512
BLOCK_SIZE = 64

ProgressFn = Callable[[int, int, int], None]


@dataclass(frozen=True)
class SearchRecord:
    """Outcome of one per-m search: found (N, x) or exhausted bound."""

    m: int
    status: str
    N: int | None
    x: int | None
    bound_used: int
    candidates_tested: int
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "status": self.status,
            "N": self.N,
            "x": self.x,
            "bound_used": self.bound_used,
            "candidates_tested": self.candidates_tested,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_csv_row(self) -> str:
        n = "" if self.N is None else str(self.N)
        x = "" if self.x is None else str(self.x)
        return (
            f"{self.m},{self.status},{n},{x},{self.bound_used},"
            f"{self.candidates_tested},{self.elapsed_ms:.3f}"
        )

    @classmethod
    def from_dict(cls, d: dict) -> "SearchRecord":
        return cls(
            d["m"], d["status"], d["N"], d["x"],
            d["bound_used"], d["candidates_tested"], float(d["elapsed_ms"]),
        )

    @classmethod
    def from_csv_row(cls, line: str) -> "SearchRecord":
        f = line.rstrip("\n").split(",")
        if len(f) != 7:
            raise ValueError(f"malformed record row: {line!r}")
        return cls(
            int(f[0]), f[1],
            int(f[2]) if f[2] else None,
            int(f[3]) if f[3] else None,
            int(f[4]), int(f[5]), float(f[6]),
        )


@dataclass(frozen=True)
class CandidateFailure:
    """One rejected modulus: which condition broke first, and where."""

    N: int
    failed_check: str
    witness: Witness

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "failed_check": self.failed_check,
            "witness": self.witness.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


@dataclass(frozen=True)
class SweepResult:
    record: SearchRecord
    failures: tuple[CandidateFailure, ...]


def ramsey_recursive_bound(colors: int) -> int:
    """Recursive upper bound for the multicolor triangle Ramsey number:
    6 at two colors, then c * (previous - 1) + 2.

    Any modulus admitting an m-class partition must stay below this
    bound, which is what makes finite sweeps meaningful.
    """
    if colors < 2:
        raise ValueError(f"need at least 2 colors, got {colors}")
    value = 6
    for c in range(3, colors + 1):
        value = c * (value - 1) + 2
    return value


@dataclass(frozen=True)
class RamseyBoundTable:
    """Bounds for 2..max_colors, computed once and indexed by color count."""

    max_colors: int
    values: tuple[int, ...]

    @classmethod
    def up_to(cls, max_colors: int) -> "RamseyBoundTable":
        if max_colors < 2:
            raise ValueError(f"need at least 2 colors, got {max_colors}")
        vals = [6]
        for c in range(3, max_colors + 1):
            vals.append(c * (vals[-1] - 1) + 2)
        return cls(max_colors, tuple(vals))

    def bound(self, colors: int) -> int:
        if not 2 <= colors <= self.max_colors:
            raise ValueError(f"colors {colors} outside 2..{self.max_colors}")
        return self.values[colors - 2]


# Largest certified nonexistence bounds for the two color counts the
# single-generator family is known to skip.
DEFAULT_SWEEP_BOUNDS = {8: ramsey_recursive_bound(8), 13: 190997}


def default_sweep_bound(m: int) -> int:
    try:
        return DEFAULT_SWEEP_BOUNDS[m]
    except KeyError:
        raise ValueError(f"no default sweep bound for m={m}; pass one explicitly")


def candidate_primes(m: int, lo: int, hi: int, sieve: PrimeSieve) -> list[int]:
    """Primes N in (lo, hi] with N = 1 (mod 2m), ascending."""
    if m < 1:
        raise ValueError(f"class count must be >= 1, got {m}")
    if hi > sieve.bound:
        raise ValueError(f"hi={hi} exceeds sieve bound {sieve.bound}")
    step = 2 * m
    first = lo + 1 + (1 - (lo + 1)) % step
    if first > hi:
        return []
    grid = np.arange(first, hi + 1, step)
    return grid[sieve.is_prime[grid]].tolist()


def _sum_free_screen_fails(N: int, m: int, x: int) -> bool:
    """True iff 1 is a sum of two class-0 elements; walks the subgroup
    incrementally and aborts on the first hit, so failing candidates
    (the overwhelming majority) cost far fewer than k steps.
    """
    step = pow(x, m, N)
    k = (N - 1) // m
    seen: set[int] = set()
    t = 1
    for _ in range(k):
        b = (1 - t) % N
        if b == t or b in seen:
            return True
        seen.add(t)
        t = t * step % N
    return False


def _evaluate_candidate(
    N: int, m: int, method: str, need_witness: bool
) -> tuple[int, bool, str | None, Witness | None]:
    """(x, passed, failed_check, witness) for one qualifying modulus."""
    factors = prime_factors(N - 1, _aux_sieve(isqrt(N - 1) + 1))
    x = smallest_generator(N, factors)
    if not need_witness and _sum_free_screen_fails(N, m, x):
        return x, False, "sum_free", None
    report = check_candidate(N, m, x, method)
    if report.overall:
        return x, True, None, None
    return x, False, report.failed_condition, report.witness


def _evaluate_block(
    args: tuple[Sequence[int], int, str, bool]
) -> list[tuple[int, int, bool, str | None, Witness | None]]:
    Ns, m, method, need_witness = args
    return [(N, *_evaluate_candidate(N, m, method, need_witness)) for N in Ns]


def _scan_candidates(
    m: int,
    bound: int,
    sieve: PrimeSieve,
    *,
    stop_at_first: bool,
    collect_failures: bool,
    workers: int = 1,
    method: str = "auto",
    progress: ProgressFn | None = None,
) -> tuple[SearchRecord, tuple[CandidateFailure, ...]]:
    t0 = time.perf_counter()
    candidates = candidate_primes(m, 0, bound, sieve)
    failures: list[CandidateFailure] = []

    def finish(status: str, N, x, tested: int) -> SearchRecord:
        ms = (time.perf_counter() - t0) * 1000.0
        return SearchRecord(m, status, N, x, bound, tested, ms)

    if workers <= 1 or len(candidates) <= BLOCK_SIZE:
        for idx, N in enumerate(candidates):
            x, passed, failed, witness = _evaluate_candidate(
                N, m, method, collect_failures
            )
            if passed:
                # a sweep that finds one reports it rather than keep scanning
                return finish("found", N, x, idx + 1), tuple(failures)
            if collect_failures:
                failures.append(CandidateFailure(N, failed, witness))
            if progress and (idx + 1) % PROGRESS_STRIDE == 0:
                progress(m, N, idx + 1)
        return finish("exhausted", None, None, len(candidates)), tuple(failures)

    # Blocks run speculatively on the pool but are consumed strictly in
    # candidate order, which keeps records worker-count independent.
    # The submission window stays small so an early find does not leave
    # a long tail of queued blocks to drain.
    blocks = [
        candidates[i : i + BLOCK_SIZE] for i in range(0, len(candidates), BLOCK_SIZE)
    ]
    done = 0
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        window: deque = deque()
        next_block = 0
        while next_block < len(blocks) or window:
            while next_block < len(blocks) and len(window) < workers * 4:
                window.append(
                    pool.submit(
                        _evaluate_block,
                        (blocks[next_block], m, method, collect_failures),
                    )
                )
                next_block += 1
            block = window.popleft().result()
            for N, x, passed, failed, witness in block:
                done += 1
                if passed:
                    return finish("found", N, x, done), tuple(failures)
                if collect_failures:
                    failures.append(CandidateFailure(N, failed, witness))
            if progress:
                progress(m, block[-1][0], done)
        return finish("exhausted", None, None, len(candidates)), tuple(failures)
    finally:
        pool.shutdown(wait=False, cancel_futures=True)


def _sieve_for(bound: int, sieve: PrimeSieve | None) -> PrimeSieve:
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    if sieve is not None and sieve.bound >= bound:
        return sieve
    return sieve_primes(bound)


def search_min_modulus(
    m: int,
    bound: int = DEFAULT_SIEVE_BOUND,
    *,
    sieve: PrimeSieve | None = None,
    workers: int = 1,
    method: str = "auto",
    progress: ProgressFn | None = None,
) -> SearchRecord:
    """Least qualifying prime N <= bound whose partition passes all
    checks, or an exhausted record if none does.
    """
    if m < 2:
        raise ValueError(f"search needs m >= 2, got {m}")
    record, _ = _scan_candidates(
        m,
        bound,
        _sieve_for(bound, sieve),
        stop_at_first=True,
        collect_failures=False,
        workers=workers,
        method=method,
        progress=progress,
    )
    return record


def sweep_nonexistence(
    m: int,
    bound: int | None = None,
    *,
    sieve: PrimeSieve | None = None,
    workers: int = 1,
    method: str = "auto",
    progress: ProgressFn | None = None,
) -> SweepResult:
    """Check every qualifying prime up to the bound, recording for each
    the first condition it breaks.  Exhausted means none passed, which
    certifies nonexistence below the bound for this m.
    """
    if m < 2:
        raise ValueError(f"sweep needs m >= 2, got {m}")
    if bound is None:
        bound = default_sweep_bound(m)
    record, failures = _scan_candidates(
        m,
        bound,
        _sieve_for(bound, sieve),
        stop_at_first=False,
        collect_failures=True,
        workers=workers,
        method=method,
        progress=progress,
    )
    return SweepResult(record, failures)


_WORKER_STATE: dict = {}


def _init_search_worker(bound: int, method: str) -> None:
    _WORKER_STATE["sieve"] = sieve_primes(bound)
    _WORKER_STATE["method"] = method


def _search_job(args: tuple[int, int]) -> SearchRecord:
    m, bound = args
    record, _ = _scan_candidates(
        m,
        bound,
        _WORKER_STATE["sieve"],
        stop_at_first=True,
        collect_failures=False,
        workers=1,
        method=_WORKER_STATE["method"],
    )
    return record


def search_all(
    m_lo: int,
    m_hi: int,
    bound: int = DEFAULT_SIEVE_BOUND,
    *,
    workers: int = 1,
    method: str = "auto",
    progress: ProgressFn | None = None,
    resume_records: Iterable[SearchRecord] = (),
    on_record: Callable[[SearchRecord], None] | None = None,
) -> list[SearchRecord]:
    """One record per m in [m_lo, m_hi], ascending.

    Parallelism is across color counts; each per-m search stays in
    candidate order, so results are independent of worker count.
    Records from a previous run are reused verbatim when their bound
    matches, and `on_record` streams completed records in m order so an
    interrupted run resumes from its own output.
    """
    if not 2 <= m_lo <= m_hi:
        raise ValueError(f"need 2 <= m_lo <= m_hi, got {m_lo}..{m_hi}")
    resume = {
        r.m: r
        for r in resume_records
        if r.bound_used == bound and m_lo <= r.m <= m_hi
    }
    out: list[SearchRecord] = []

    def emit(rec: SearchRecord) -> None:
        out.append(rec)
        if on_record:
            on_record(rec)
        if progress:
            progress(rec.m, rec.N or 0, rec.candidates_tested)

    pending = [m for m in range(m_lo, m_hi + 1) if m not in resume]
    if workers <= 1:
        sieve = _sieve_for(bound, None)
        for m in range(m_lo, m_hi + 1):
            if m in resume:
                emit(resume[m])
            else:
                rec, _ = _scan_candidates(
                    m, bound, sieve,
                    stop_at_first=True, collect_failures=False, method=method,
                )
                emit(rec)
        return out

    with ProcessPoolExecutor(
        max_workers=workers,
        initializer=_init_search_worker,
        initargs=(bound, method),
    ) as pool:
        computed = pool.map(_search_job, [(m, bound) for m in pending], chunksize=1)
        it = iter(computed)
        for m in range(m_lo, m_hi + 1):
            emit(resume[m] if m in resume else next(it))
    return out


def records_to_csv(records: Iterable[SearchRecord]) -> str:
    lines = [SEARCH_CSV_HEADER]
    lines.extend(r.to_csv_row() for r in records)
    return "\n".join(lines) + "\n"


def records_to_jsonl(records: Iterable[SearchRecord]) -> str:
    return "".join(json.dumps(r.to_dict(), separators=(",", ":")) + "\n" for r in records)


def records_from_csv(text: str) -> list[SearchRecord]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return []
    if lines[0] != SEARCH_CSV_HEADER:
        raise ValueError(f"unexpected header: {lines[0]!r}")
    return [SearchRecord.from_csv_row(ln) for ln in lines[1:]]


def records_from_jsonl(text: str) -> list[SearchRecord]:
    return [
        SearchRecord.from_dict(json.loads(ln))
        for ln in text.splitlines()
        if ln.strip()
    ]
