"""The compiled kernels and the pure-Python twins must agree exactly."""

import itertools
import random

import numpy as np

from absorder import _kernels_py, kernels
from absorder.order import _perm_array, leq_length
from absorder.perms import Permutation, sn_elements


def test_which_implementation_is_active():
    assert kernels.IMPLEMENTATION in ("c", "python")


def random_perm_array(rng, count, n):
    rows = []
    for _ in range(count):
        row = list(range(n))
        rng.shuffle(row)
        rows.append(row)
    return np.array(rows, dtype=np.int8)


def test_cycle_count_agreement():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randrange(1, 10)
        row = list(range(n))
        rng.shuffle(row)
        arr = np.array(row, dtype=np.int8)
        assert kernels.cycle_count(arr) == _kernels_py.cycle_count(row)


def test_quotient_cycle_count_agreement():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randrange(1, 10)
        u = list(range(n))
        v = list(range(n))
        rng.shuffle(u)
        rng.shuffle(v)
        u_inv = [0] * n
        for i, j in enumerate(u):
            u_inv[j] = i
        got = kernels.quotient_cycle_count(
            np.array(u_inv, dtype=np.int8), np.array(v, dtype=np.int8)
        )
        assert got == _kernels_py.quotient_cycle_count(u_inv, v)


def test_leq_table_agreement_random():
    rng = random.Random(3)
    arr = random_perm_array(rng, 40, 6)
    assert np.array_equal(kernels.leq_table(arr), _kernels_py.leq_table(arr))


def test_leq_cross_agreement_random():
    rng = random.Random(4)
    us = random_perm_array(rng, 25, 7)
    vs = random_perm_array(rng, 35, 7)
    assert np.array_equal(
        kernels.leq_cross(us, vs), _kernels_py.leq_cross(us, vs)
    )


def test_leq_table_matches_leq_length_on_s4():
    perms = sn_elements(4)
    table = kernels.leq_table(_perm_array(perms))
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            assert bool(table[i, j]) == leq_length(u, v)


def test_leq_cross_consistent_with_leq_table():
    perms = sn_elements(4)
    arr = _perm_array(perms)
    table = kernels.leq_table(arr)
    cross = kernels.leq_cross(arr[:10], arr[10:])
    assert np.array_equal(cross, table[:10, 10:])


def test_cycle_count_exhaustive_s5():
    for p in itertools.permutations(range(5)):
        w = Permutation([x + 1 for x in p])
        assert kernels.cycle_count(np.array(p, dtype=np.int8)) == w.cycle_count()
