"""Single-generator class partitions of the punctured line Z_N \\ {0}.

Fix a prime N = mk + 1 and a generator x of the multiplicative group.
Class zero is the set of m-th power residues

    X_0 = {x^(jm) : 0 <= j < k},

the unique subgroup of order k (unique because the group is cyclic, so
X_0 does not depend on which generator was chosen).  The remaining
classes are its cosets X_i = x * X_{i-1}, and together they partition
Z_N \\ {0} into m classes of k elements each.

Constructors reject inputs that cannot produce a usable partition:
build_partition additionally requires N = 1 (mod 2m), i.e. k even,
because odd k makes -1 land outside X_0 and every class asymmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

from .residues import ResidueSet, scale_set


@dataclass(frozen=True)
class CyclotomicPartition:
    """A validated partition of Z_N \\ {0} into m power classes.

    classes[0] contains 1; classes[i] = x * classes[i-1] (mod N);
    every class has exactly k = (N - 1) / m elements.
    """

    N: int
    m: int
    k: int
    x: int
    classes: tuple[ResidueSet, ...]

    def __iter__(self):
        return iter(self.classes)


def build_class_zero(N: int, m: int, x: int) -> ResidueSet:
    """The order-k subgroup {x^(jm)} of Z_N^*, for prime N with m | N-1.

    Rejects m not dividing N - 1, and rejects x whose powers close up
    early (fewer than k distinct elements means x is not a generator).
    """
    if N < 3:
        raise ValueError(f"modulus must be an odd prime, got {N}")
    if m < 1 or (N - 1) % m != 0:
        raise ValueError(f"class count {m} does not divide {N - 1}")
    if x % N == 0:
        raise ValueError(f"generator {x} is 0 mod {N}")
    k = (N - 1) // m
    step = pow(x, m, N)
    elems = []
    t = 1
    for _ in range(k):
        elems.append(t)
        t = t * step % N
    X0 = ResidueSet.from_elements(N, elems)
    if len(X0) < k:
        raise ValueError(
            f"x={x} yields only {len(X0)} of {k} class elements mod {N}; not a generator"
        )
    return X0


def _partition_from_class_zero(N: int, m: int, x: int, X0: ResidueSet) -> CyclotomicPartition:
    classes = [X0]
    cur = X0
    for _ in range(m - 1):
        cur = scale_set(cur, x)
        classes.append(cur)
    union_bits = 0
    for c in classes:
        union_bits |= c.bits
    if union_bits != ResidueSet.nonzero(N).bits or union_bits.bit_count() != N - 1:
        raise ValueError(f"classes of x={x} mod {N} overlap; not a generator")
    return CyclotomicPartition(N, m, (N - 1) // m, x % N, tuple(classes))


def build_partition(N: int, m: int, x: int) -> CyclotomicPartition:
    """All m classes, validated to tile Z_N \\ {0} exactly.

    Demands N = 1 (mod 2m): with k odd no class is symmetric, so such
    moduli can never carry a valid multi-basis and are rejected here
    rather than wasting checker time downstream.
    """
    if m < 1 or N % (2 * m) != 1:
        raise ValueError(f"need N = 1 (mod 2m); got N={N}, m={m}")
    return _partition_from_class_zero(N, m, x, build_class_zero(N, m, x))


def _build_partition_unchecked(N: int, m: int, x: int) -> CyclotomicPartition:
    # Test hook: skips the k-even congruence (still validates the tiling)
    # so checker failure paths on asymmetric partitions can be exercised.
    return _partition_from_class_zero(N, m, x, build_class_zero(N, m, x))
