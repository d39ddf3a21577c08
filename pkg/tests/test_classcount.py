import numpy as np
import pytest

from ramsey_forge.classcount import (
    class_index_table,
    counting_report,
    pair_sum_class_matrix,
)
from ramsey_forge.numbertheory import prime_factors, sieve_primes, smallest_generator


def reference_class_table(N, m, x):
    cls = [-1] * N
    t = 1
    for e in range(N - 1):
        cls[t] = e % m
        t = t * x % N
    return cls


def reference_pair_matrix(N, m, x):
    cls = reference_class_table(N, m, x)
    T = [[0] * m for _ in range(m)]
    for a in range(2, N):
        b = (1 - a) % N
        T[cls[a]][cls[b]] += 1
    return T


def test_class_table_small_example():
    # powers of 2 mod 13: 1,2,4,8,3,6,12,11,9,5,10,7
    cls = class_index_table(13, 3, 2)
    assert cls[0] == -1
    assert cls[1] == 0 and cls[2] == 1 and cls[4] == 2 and cls[8] == 0
    assert cls[12] == 0 and cls[7] == 2


def test_class_table_matches_sequential_walk():
    sieve = sieve_primes(3000)
    for N in sieve.primes.tolist()[2::11]:
        fs = prime_factors(N - 1, sieve)
        x = smallest_generator(N, fs)
        for m in [d for d in range(1, 13) if (N - 1) % d == 0]:
            assert class_index_table(N, m, x).tolist() == reference_class_table(N, m, x), (N, m)


def test_class_table_rejects_non_generator():
    with pytest.raises(ValueError):
        class_index_table(13, 3, 5)
    with pytest.raises(ValueError):
        class_index_table(13, 3, 0)
    with pytest.raises(ValueError):
        class_index_table(13, 5, 2)


def test_pair_matrix_matches_definition():
    sieve = sieve_primes(2000)
    for N in sieve.primes.tolist()[3::17]:
        fs = prime_factors(N - 1, sieve)
        x = smallest_generator(N, fs)
        for m in [d for d in range(1, 9) if (N - 1) % d == 0]:
            T = pair_sum_class_matrix(class_index_table(N, m, x), m)
            assert T.tolist() == reference_pair_matrix(N, m, x), (N, m)


def test_pair_matrix_row_sums_and_symmetry():
    # ordered pairs (a, 1-a) over a=2..N-1: class p contributes its full
    # size, minus one when p is the class of 1 itself (a=1 is excluded)
    for N, m, x in [(13, 3, 2), (41, 4, 6), (97, 6, 5), (71, 5, 7)]:
        k = (N - 1) // m
        T = pair_sum_class_matrix(class_index_table(N, m, x), m)
        assert np.array_equal(T, T.T)
        sums = T.sum(axis=1)
        assert sums[0] == k - 1
        assert all(int(s) == k for s in sums[1:])


def test_counting_report_worked_examples():
    assert counting_report(5, 2, 2).overall
    assert counting_report(13, 3, 2).overall
    rep = counting_report(7, 3, 3)
    assert rep.flags() == (True, True, False, None)
    assert rep.witness.residue == 3


def test_counting_report_short_circuits_on_odd_k():
    rep = counting_report(7, 2, 3)
    assert rep.flags() == (False, None, None, None)
    assert rep.witness.condition == "symmetric"
    assert rep.witness.classes == (0,)
    assert rep.witness.residue == 1


def test_counting_report_large_value_matches_known_row():
    # spot check at search scale: the m=100 minimum
    assert counting_report(95801, 100, 3).overall


def test_counting_report_rejects_bad_inputs():
    with pytest.raises(ValueError):
        counting_report(13, 5, 2)
    with pytest.raises(ValueError):
        counting_report(13, 3, 13)
    with pytest.raises(ValueError):
        counting_report(13, 3, 5)
