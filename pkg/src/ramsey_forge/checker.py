"""Fast validity checks for single-generator partitions.

Two interchangeable engines sit behind `full_fast_check`:

  * "bitset"   - explicit sumsets on the bit-mask sets.  The subgroup
                 structure collapses the work: class 0 is sum-free iff
                 no two of its elements sum to 1 (divide any violating
                 pair through by the sum to land on 1), and pairs
                 (0, i) covering everything implies all pairs do, since
                 scaling by x^i maps one onto the other.  So only one
                 class is screened for sums and only m - 1 sumsets are
                 formed instead of m^2.
  * "counting" - the O(N) class/count pass from `classcount`.

Benchmarks put the counting pass ahead at every modulus scale tried
(10x at N ~ 300, widening past 50x by N ~ 30000), so "auto" always
takes it and keeps the bit masks only for moduli too large for the
int64 class table.  The bitset engine stays because it computes the
same answers from different primitives; the test suite holds the two
to identical flags and witnesses, bit for bit.

Checks run in the fixed order symmetric -> sum_free -> cyclic_basis ->
triangle and stop at the first failure (later flags stay None).
"""

from __future__ import annotations

from .classcount import MAX_COUNTING_MODULUS, counting_report
from .partition import CyclotomicPartition, _build_partition_unchecked
from .report import CheckReport, Witness
from .residues import ResidueSet, sumset

_METHODS = ("auto", "bitset", "counting")


def _resolve_method(N: int, method: str) -> str:
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")
    if method == "auto":
        return "counting" if N < MAX_COUNTING_MODULUS else "bitset"
    return method


def _symmetric(p: CyclotomicPartition) -> Witness | None:
    N = p.N
    for i, X in enumerate(p.classes):
        if X != X.negated():
            for a in X:
                if (N - a) % N not in X:
                    return Witness("symmetric", (i,), a)
    return None


def _sum_free(X0: ResidueSet) -> Witness | None:
    N = X0.N
    for a in X0:
        if (1 - a) % N in X0:
            return Witness("sum_free", (0, 0), a)
    return None


def _cyclic_basis(X0: ResidueSet) -> Witness | None:
    S = sumset(X0, X0)
    expected = X0.complement()
    if S == expected:
        return None
    diff = S.bits ^ expected.bits
    z = (diff & -diff).bit_length() - 1
    return Witness("cyclic_basis", (0,), z)


def _triangle(p: CyclotomicPartition) -> Witness | None:
    target = ResidueSet.nonzero(p.N)
    X0 = p.classes[0]
    for i in range(1, p.m):
        S = sumset(X0, p.classes[i])
        if S != target:
            diff = S.bits ^ target.bits
            z = (diff & -diff).bit_length() - 1
            return Witness("triangle", (0, i), z)
    return None


def check_symmetric(p: CyclotomicPartition) -> bool:
    """Every class closed under negation."""
    return _symmetric(p) is None


def check_sum_free_fast(X0: ResidueSet) -> bool:
    """Class 0 sum-free, tested as 1 not in X_0 + X_0.

    Only k membership probes: a + b lands in X_0 for some a, b in X_0
    iff dividing through by that sum writes 1 = a' + b' with a', b' in
    the subgroup X_0.
    """
    return _sum_free(X0) is None


def check_cyclic_basis(X0: ResidueSet) -> bool:
    """X_0 + X_0 equals Z_N minus X_0 exactly.

    Checking class 0 settles every class: scaling by x^i carries the
    class-0 identity onto class i.
    """
    return _cyclic_basis(X0) is None


def check_triangle_fast(p: CyclotomicPartition) -> bool:
    """X_0 + X_i covers all of Z_N \\ {0} for every i >= 1.

    Covers all distinct pairs: X_i + X_j scales down to X_0 + X_{j-i}.
    Vacuously true for m = 1.
    """
    return _triangle(p) is None


def _bitset_report(p: CyclotomicPartition) -> CheckReport:
    w = _symmetric(p)
    if w is not None:
        return CheckReport(False, None, None, None, w)
    w = _sum_free(p.classes[0])
    if w is not None:
        return CheckReport(True, False, None, None, w)
    w = _cyclic_basis(p.classes[0])
    if w is not None:
        return CheckReport(True, True, False, None, w)
    w = _triangle(p)
    if w is not None:
        return CheckReport(True, True, True, False, w)
    return CheckReport.all_passed()


def full_fast_check(p: CyclotomicPartition, method: str = "auto") -> CheckReport:
    """All four conditions on an already-built partition.

    The counting engine re-derives the classes from (N, m, x); that is
    sound because the constructor validated they tile Z_N \\ {0}.
    """
    if _resolve_method(p.N, method) == "counting":
        return counting_report(p.N, p.m, p.x)
    return _bitset_report(p)


def check_candidate(N: int, m: int, x: int, method: str = "auto") -> CheckReport:
    """Report for the construction (N, m, x) without requiring the
    caller to build anything.

    The bit-mask route materializes the partition first; the counting
    route never does, which is what makes million-range moduli cheap.
    Either way an x that fails to generate the group raises ValueError.
    """
    if _resolve_method(N, method) == "counting":
        return counting_report(N, m, x)
    return _bitset_report(_build_partition_unchecked(N, m, x))
