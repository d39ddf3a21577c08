"""Dense subsets of Z_N as arbitrary-precision bit masks.

A set is one Python integer: bit j set means residue j is present.
That makes union/intersection single `|`/`&` operations, and makes the
cyclic shift (adding a constant to every element) a shift-and-fold:

    (bits << s | bits >> (N - s)) & ((1 << N) - 1)

Sumsets are computed by shifting one operand's mask by each element of
the other and OR-ing the translates together, so A + B costs |smaller|
big-integer operations of N bits each, not |A| * |B| residue additions.

Instances are immutable: every operation returns a new set, so they can
be hashed, shared across threads, and used as dict keys.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator


class ResidueSet:
    """Immutable subset of Z_N = {0, 1, ..., N-1}."""

    __slots__ = ("N", "_bits")

    N: int

    def __init__(self, N: int, bits: int = 0):
        if N < 1:
            raise ValueError(f"modulus must be >= 1, got {N}")
        if bits < 0 or bits >> N:
            raise ValueError(f"bit mask has residues outside Z_{N}")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "_bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueSet is immutable")

    @classmethod
    def empty(cls, N: int) -> "ResidueSet":
        return cls(N, 0)

    @classmethod
    def nonzero(cls, N: int) -> "ResidueSet":
        """The full punctured line {1, ..., N-1}."""
        return cls(N, ((1 << N) - 1) & ~1)

    @classmethod
    def from_elements(cls, N: int, elements: Iterable[int]) -> "ResidueSet":
        buf = bytearray(N // 8 + 1)
        for e in elements:
            if not 0 <= e < N:
                raise ValueError(f"residue {e} outside Z_{N}")
            buf[e >> 3] |= 1 << (e & 7)
        return cls(N, int.from_bytes(buf, "little"))

    @property
    def bits(self) -> int:
        return self._bits

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __bool__(self) -> bool:
        return self._bits != 0

    def __contains__(self, j: int) -> bool:
        if not 0 <= j < self.N:
            raise ValueError(f"residue {j} outside Z_{self.N}")
        return (self._bits >> j) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        b = self._bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def elements(self) -> list[int]:
        """Members in ascending order."""
        return list(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueSet):
            return NotImplemented
        return self.N == other.N and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.N, self._bits))

    def _same_modulus(self, other: "ResidueSet") -> None:
        if self.N != other.N:
            raise ValueError(f"modulus mismatch: {self.N} vs {other.N}")

    def __or__(self, other: "ResidueSet") -> "ResidueSet":
        self._same_modulus(other)
        return ResidueSet(self.N, self._bits | other._bits)

    def __and__(self, other: "ResidueSet") -> "ResidueSet":
        self._same_modulus(other)
        return ResidueSet(self.N, self._bits & other._bits)

    def __sub__(self, other: "ResidueSet") -> "ResidueSet":
        self._same_modulus(other)
        return ResidueSet(self.N, self._bits & ~other._bits)

    def __xor__(self, other: "ResidueSet") -> "ResidueSet":
        self._same_modulus(other)
        return ResidueSet(self.N, self._bits ^ other._bits)

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.N, ~self._bits & ((1 << self.N) - 1))

    def shifted(self, s: int) -> "ResidueSet":
        """{a + s mod N : a in self}, the cyclic translate."""
        N = self.N
        s %= N
        if s == 0:
            return self
        mask = (1 << N) - 1
        return ResidueSet(N, ((self._bits << s) | (self._bits >> (N - s))) & mask)

    def negated(self) -> "ResidueSet":
        """{-a mod N : a in self}."""
        N = self.N
        return ResidueSet.from_elements(N, ((N - a) % N for a in self))

    def min_element(self) -> int:
        if not self._bits:
            raise ValueError("empty set has no minimum")
        return (self._bits & -self._bits).bit_length() - 1

    def __repr__(self) -> str:
        if len(self) <= 12:
            return f"ResidueSet(N={self.N}, {{{', '.join(map(str, self))}}})"
        return f"ResidueSet(N={self.N}, size={len(self)})"


def sumset(A: ResidueSet, B: ResidueSet) -> ResidueSet:
    """{a + b mod N : a in A, b in B} by shift-and-fold.

    Empty operands give the empty set; {0} is the identity translate.
    """
    A._same_modulus(B)
    N = A.N
    if len(B) < len(A):
        A, B = B, A
    base = B.bits
    mask = (1 << N) - 1
    acc = 0
    for a in A:
        if a == 0:
            acc |= base
        else:
            acc |= ((base << a) | (base >> (N - a))) & mask
    return ResidueSet(N, acc)


def scale_set(A: ResidueSet, c: int) -> ResidueSet:
    """{c * a mod N : a in A}; c must be invertible mod N.

    Multiplication by a unit permutes Z_N, so cardinality is preserved.
    """
    N = A.N
    c %= N
    if c == 0 or gcd(c, N) != 1:
        raise ValueError(f"scale factor {c} is not a unit mod {N}")
    if c == 1:
        return A
    return ResidueSet.from_elements(N, (a * c % N for a in A))
