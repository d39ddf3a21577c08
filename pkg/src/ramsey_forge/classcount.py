"""Counting engine: all four conditions from one O(N) pass.

Label every nonzero residue with the index of the power class that
contains it: cls[x^e mod N] = e mod m.  For classes p, q let

    T[p][q] = #{(a, b) : a + b = 1 (mod N), a, b != 0, cls[a] = p, cls[b] = q}.

T determines the whole sumset structure.  For any nonzero z of class j,
multiplying a representation 1 = a + b through by z bijects it with a
representation z = az + bz whose parts lie in classes shifted up by j.
Hence z has exactly T[(p - j) mod m][(q - j) mod m] representations as
a sum from X_p + X_q, and:

    * classes are symmetric      iff  k = (N - 1) / m is even,
    * class 0 is sum-free        iff  T[0][0] == 0,
    * class 0 is a cyclic basis  iff  symmetric and T[d][d] > 0
                                      for d = 1..m-1,
    * every distinct pair covers Z_N \\ {0}  iff  T[p][q] > 0 for all
                                      p != q  (pairs (0, i) suffice:
                                      scaling by x^i shifts both class
                                      indices, reaching every pair).

Building cls takes one ~sqrt(N) x ~sqrt(N) table of products instead of
N sequential multiplications: with s ~ sqrt(N-1), row b and column a of
the outer product (x^(bs)) * (x^a) is x^(bs + a), covering every
exponent below N - 1.  Exponents that spill past N - 1 relabel the same
residue with the same class, since m divides N - 1.  All arithmetic
stays below 2^63 for any modulus under 2^31, so int64 is exact.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .report import CheckReport, Witness

MAX_COUNTING_MODULUS = 1 << 31


def class_index_table(N: int, m: int, x: int) -> np.ndarray:
    """cls array of length N: cls[x^e] = e mod m, cls[0] = -1.

    Raises if x does not generate the full group (detected by powers
    covering fewer than N - 1 residues).
    """
    if N < 3:
        raise ValueError(f"modulus must be an odd prime, got {N}")
    if N >= MAX_COUNTING_MODULUS:
        raise ValueError(f"modulus {N} too large for int64 product grid")
    if m < 1 or (N - 1) % m != 0:
        raise ValueError(f"class count {m} does not divide {N - 1}")
    x %= N
    if x == 0:
        raise ValueError(f"generator {x} is 0 mod {N}")

    s = isqrt(N - 1) + 1
    rows = -(-(N - 1) // s)

    baby = np.empty(s, dtype=np.int64)
    t = 1
    for a in range(s):
        baby[a] = t
        t = t * x % N
    giant = np.empty(rows, dtype=np.int64)
    step = pow(x, s, N)
    t = 1
    for b in range(rows):
        giant[b] = t
        t = t * step % N

    powers = giant[:, None] * baby[None, :] % N
    exp_class = (
        (np.arange(rows, dtype=np.int64) * (s % m))[:, None]
        + np.arange(s, dtype=np.int64)[None, :]
    ) % m

    cls = np.full(N, -1, dtype=np.int64)
    cls[powers.ravel()] = exp_class.ravel()
    if int((cls >= 0).sum()) != N - 1:
        raise ValueError(f"x={x} does not generate the multiplicative group mod {N}")
    return cls


def pair_sum_class_matrix(cls: np.ndarray, m: int) -> np.ndarray:
    """T[p][q] = number of ordered pairs (a, b), a + b = 1, with classes (p, q).

    The pairs are (a, N + 1 - a) for a = 2..N-1, so the partner classes
    are just the class slice reversed.
    """
    u = cls[2:]
    v = u[::-1]
    return np.bincount(u * m + v, minlength=m * m).reshape(m, m)


def _first_residue_in_classes(cls: np.ndarray, classes: set[int]) -> int:
    mask = np.isin(cls, sorted(classes))
    idx = int(mask.argmax())
    if not mask[idx]:
        raise AssertionError("witness class unexpectedly empty")
    return idx


def counting_report(N: int, m: int, x: int) -> CheckReport:
    """Full four-condition report for the construction (N, m, x).

    Same flag order, short-circuiting, and witness conventions as the
    bit-mask checker, but the class/count pass replaces per-class
    sumsets, so cost is O(N) plus an O(k) sum-free screen that rejects
    most candidates before the table is ever built.
    """
    if m < 1 or N < 3 or (N - 1) % m != 0:
        raise ValueError(f"class count {m} does not divide {N - 1}")
    x %= N
    if x == 0:
        raise ValueError(f"generator {x} is 0 mod {N}")
    k = (N - 1) // m

    step = pow(x, m, N)
    elems: set[int] = set()
    t = 1
    for _ in range(k):
        elems.add(t)
        t = t * step % N
    if len(elems) < k:
        raise ValueError(
            f"x={x} yields only {len(elems)} of {k} class elements mod {N}; not a generator"
        )

    if k % 2 != 0:
        # -1 = x^((N-1)/2) falls outside X_0, which makes negation move
        # every class wholesale; the first failing element of class 0 is
        # then simply its minimum.
        w = Witness("symmetric", (0,), min(elems))
        return CheckReport(False, None, None, None, w)

    bad = [a for a in elems if (1 - a) % N in elems]
    if bad:
        w = Witness("sum_free", (0, 0), min(bad))
        return CheckReport(True, False, None, None, w)

    cls = class_index_table(N, m, x)
    T = pair_sum_class_matrix(cls, m)

    diag = T.diagonal()
    failing_d = np.flatnonzero(diag[1:] == 0) + 1
    if failing_d.size:
        # z of class j is missed by X_0 + X_0 exactly when the diagonal
        # entry at d = -j mod m vanishes.
        js = {(m - int(d)) % m for d in failing_d}
        z = _first_residue_in_classes(cls, js)
        w = Witness("cyclic_basis", (0,), z)
        return CheckReport(True, True, False, None, w)

    if m > 1:
        off = ~np.eye(m, dtype=bool)
        if int(T[off].min()) == 0:
            p_all = np.arange(m)
            for i in range(1, m):
                vec = T[p_all, (p_all + i) % m]
                zero_p = np.flatnonzero(vec == 0)
                if zero_p.size:
                    js = {(m - int(p)) % m for p in zero_p}
                    z = _first_residue_in_classes(cls, js)
                    w = Witness("triangle", (0, i), z)
                    return CheckReport(True, True, True, False, w)
            raise AssertionError("off-diagonal zero vanished during witness scan")

    return CheckReport.all_passed()
