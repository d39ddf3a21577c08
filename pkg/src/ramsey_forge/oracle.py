"""Definition-level reference checks.

Everything in this module computes straight from the definitions: full
double-loop sumsets over element lists, explicit boolean relation
matrices, no subgroup shortcuts, no class-0 reductions.  It is the
yardstick the fast checker is tested against, so it deliberately shares
nothing with it beyond ResidueSet membership primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .checker import full_fast_check
from .numbertheory import PrimeSieve, prime_factors, sieve_primes, smallest_generator
from .partition import CyclotomicPartition, build_partition
from .report import CheckReport, Witness
from .residues import ResidueSet

ORACLE_SCAN_MAX = 2000
RELATION_CAP = 200


@dataclass(frozen=True)
class LabeledPartition:
    """An arbitrary partition of Z_N \\ {0} into labeled classes.

    Unlike CyclotomicPartition there is no generator structure: any
    family of disjoint nonempty sets covering 1..N-1 is accepted.
    """

    N: int
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        total = 0
        for i, c in enumerate(self.classes):
            if not c:
                raise ValueError(f"class {i} is empty")
            for e in c:
                if not 1 <= e < self.N:
                    raise ValueError(f"class {i} holds {e}, outside 1..{self.N - 1}")
            total += len(c)
            seen |= c
        if total != len(seen) or len(seen) != self.N - 1:
            raise ValueError("classes do not partition Z_N \\ {0}")

    @classmethod
    def from_sets(cls, N: int, sets: Iterable[Iterable[int]]) -> "LabeledPartition":
        return cls(N, tuple(frozenset(s) for s in sets))

    @classmethod
    def from_cyclotomic(cls, p: CyclotomicPartition) -> "LabeledPartition":
        return cls(p.N, tuple(frozenset(c) for c in p.classes))


def _as_labeled(p: LabeledPartition | CyclotomicPartition) -> LabeledPartition:
    if isinstance(p, CyclotomicPartition):
        return LabeledPartition.from_cyclotomic(p)
    return p


def naive_check(p: LabeledPartition | CyclotomicPartition) -> CheckReport:
    """All four conditions on every class and every pair, by definition.

    Same flag order and short-circuiting as the fast checker so the two
    reports can be compared flag for flag.  Witnesses point at the
    first violation in (class indices, residue) order.
    """
    p = _as_labeled(p)
    N = p.N
    classes = [sorted(c) for c in p.classes]
    csets = [set(c) for c in p.classes]

    for i, c in enumerate(classes):
        for a in c:
            if (N - a) % N not in csets[i]:
                w = Witness("symmetric", (i,), a)
                return CheckReport(False, None, None, None, w)

    self_sums = [{(a + b) % N for a in c for b in c} for c in classes]

    for i, c in enumerate(classes):
        bad = self_sums[i] & csets[i]
        if bad:
            w = Witness("sum_free", (i, i), min(bad))
            return CheckReport(True, False, None, None, w)

    universe = set(range(N))
    for i, c in enumerate(classes):
        expected = universe - csets[i]
        if self_sums[i] != expected:
            w = Witness("cyclic_basis", (i,), min(self_sums[i] ^ expected))
            return CheckReport(True, True, False, None, w)

    target = universe - {0}
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            # addition is commutative, so (i, j) settles (j, i) too
            s = {(a + b) % N for a in classes[i] for b in classes[j]}
            if s != target:
                w = Witness("triangle", (i, j), min(s ^ target))
                return CheckReport(True, True, True, False, w)

    return CheckReport.all_passed()


@dataclass(frozen=True)
class Relation:
    """Binary relation on {0..N-1}; row u is a bit mask over columns v."""

    N: int
    rows: tuple[int, ...]

    @classmethod
    def identity(cls, N: int) -> "Relation":
        return cls(N, tuple(1 << u for u in range(N)))

    @classmethod
    def empty(cls, N: int) -> "Relation":
        return cls(N, (0,) * N)

    @classmethod
    def from_difference_set(cls, N: int, X: Iterable[int]) -> "Relation":
        """(u, v) related iff u - v mod N lies in X; built pair by pair."""
        xs = set(X)
        rows = []
        for u in range(N):
            row = 0
            for v in range(N):
                if (u - v) % N in xs:
                    row |= 1 << v
            rows.append(row)
        return cls(N, tuple(rows))

    def _same_size(self, other: "Relation") -> None:
        if self.N != other.N:
            raise ValueError(f"size mismatch: {self.N} vs {other.N}")

    def compose(self, other: "Relation") -> "Relation":
        """(u, w) in result iff some v has (u, v) here and (v, w) there."""
        self._same_size(other)
        out = []
        for row in self.rows:
            acc = 0
            b = row
            while b:
                low = b & -b
                acc |= other.rows[low.bit_length() - 1]
                b ^= low
            out.append(acc)
        return Relation(self.N, tuple(out))

    def converse(self) -> "Relation":
        out = [0] * self.N
        for u, row in enumerate(self.rows):
            b = row
            while b:
                low = b & -b
                out[low.bit_length() - 1] |= 1 << u
                b ^= low
        return Relation(self.N, tuple(out))

    def union(self, other: "Relation") -> "Relation":
        self._same_size(other)
        return Relation(self.N, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def complement(self) -> "Relation":
        mask = (1 << self.N) - 1
        return Relation(self.N, tuple(~r & mask for r in self.rows))


def partition_atoms(p: LabeledPartition | CyclotomicPartition) -> list[Relation]:
    """The difference relations A_i = {(u, v) : u - v in X_i}."""
    p = _as_labeled(p)
    return [Relation.from_difference_set(p.N, c) for c in p.classes]


def relation_algebra_check(
    p: LabeledPartition | CyclotomicPartition, cap: int = RELATION_CAP
) -> bool:
    """Literal check of the three atom axioms on explicit N x N relations:

        converse(A_i) = A_i
        A_i o A_i     = Id union all other atoms  (= complement of A_i off Id)
        A_i o A_j     = complement of Id          (i != j)

    Quadratic in N, so moduli above `cap` are rejected rather than run.
    """
    p = _as_labeled(p)
    N = p.N
    if N > cap:
        raise ValueError(f"modulus {N} exceeds relation-algebra cap {cap}")
    atoms = partition_atoms(p)
    ident = Relation.identity(N)
    not_ident = ident.complement()

    for a in atoms:
        if a.converse() != a:
            return False

    for i, a in enumerate(atoms):
        expected = ident
        for j, b in enumerate(atoms):
            if j != i:
                expected = expected.union(b)
        if a.compose(a) != expected:
            return False

    for i, a in enumerate(atoms):
        for j, b in enumerate(atoms):
            if i != j and a.compose(b) != not_ident:
                return False

    return True


def atom_decomposition(
    rel: Relation, atoms: Sequence[Relation], ident: Relation
) -> tuple[bool, tuple[int, ...]] | None:
    """Express rel as Id? union of atoms, or None if it is not exactly one.

    Greedy works because distinct atoms are disjoint relations.
    """
    has_id = all(r >> u & 1 for u, r in enumerate(rel.rows))
    acc = ident if has_id else Relation.empty(rel.N)
    picked = []
    for i, a in enumerate(atoms):
        if all(ar & rr == ar for ar, rr in zip(a.rows, rel.rows)):
            picked.append(i)
            acc = acc.union(a)
    if acc != rel:
        return None
    return has_id, tuple(picked)


@dataclass(frozen=True)
class ScanRecord:
    N: int
    m: int
    x: int
    fast: CheckReport
    naive: CheckReport

    @property
    def agree(self) -> bool:
        return self.fast.flags() == self.naive.flags()

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "m": self.m,
            "x": self.x,
            "fast": self.fast.to_dict(),
            "naive": self.naive.to_dict(),
            "agree": self.agree,
        }


def _divisors(n: int) -> list[int]:
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def exhaustive_small_scan(
    N_max: int, sieve: PrimeSieve | None = None
) -> list[ScanRecord]:
    """Every (N, m) with prime N <= N_max, m >= 2, N = 1 (mod 2m),
    using the least generator; each is run through both checkers.

    Capped at N_max <= 2000: the reference checker is quadratic and this
    scan exists to cross-examine the fast path, not to search.
    """
    if N_max > ORACLE_SCAN_MAX:
        raise ValueError(f"scan limited to N <= {ORACLE_SCAN_MAX}, got {N_max}")
    if sieve is None or sieve.bound < N_max:
        sieve = sieve_primes(max(N_max, 2))
    records = []
    for N in sieve.primes.tolist():
        if N > N_max or N < 5:
            continue
        factors = prime_factors(N - 1, sieve)
        x = smallest_generator(N, factors)
        for m in _divisors((N - 1) // 2):
            if m < 2:
                continue
            p = build_partition(N, m, x)
            records.append(
                ScanRecord(N, m, x, full_fast_check(p), naive_check(p))
            )
    return records
