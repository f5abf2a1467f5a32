"""Deletion-subcycles and the noncrossing condition, against a literal
four-cycle-enumeration oracle."""

import itertools
import random

import pytest

from absorder.cycles import (
    Cycle,
    are_noncrossing,
    crossing_witness,
    is_deletion_subcycle,
)
from absorder.errors import PreconditionError

BIG = Cycle((3, 5, 1, 9, 2, 6, 4))


def test_cycle_canonical_rotation():
    assert Cycle((3, 6, 4)) == Cycle((6, 4, 3)) == Cycle((4, 3, 6))
    assert tuple(Cycle((6, 4, 3))) == (3, 6, 4)
    assert Cycle((3, 6, 4)) != Cycle((3, 4, 6))
    with pytest.raises(ValueError):
        Cycle((1, 2, 1))


def test_deletion_subcycle_examples():
    assert is_deletion_subcycle((3, 6, 4), BIG)
    assert is_deletion_subcycle(BIG, BIG)
    assert not is_deletion_subcycle((3, 4, 6), BIG)
    assert is_deletion_subcycle((5, 9, 2), BIG)
    assert is_deletion_subcycle((9,), BIG)
    assert not is_deletion_subcycle((3, 7), BIG)


def test_deletion_subcycle_rotation_invariance():
    rng = random.Random(5)
    for _ in range(100):
        c = list(BIG)
        k = rng.randrange(len(c))
        rotated = c[k:] + c[:k]
        idx = sorted(rng.sample(range(7), rng.randrange(1, 7)))
        a = [rotated[i] for i in idx]
        assert is_deletion_subcycle(a, Cycle(rotated))
        assert is_deletion_subcycle(a, BIG)


def subsequences_of_rotations(c, length):
    """All cyclic subsequences of the given length, the literal way."""
    out = set()
    pts = tuple(c)
    for k in range(len(pts)):
        rot = pts[k:] + pts[:k]
        for idx in itertools.combinations(range(len(pts)), length):
            out.add(Cycle([rot[i] for i in idx]))
    return out


def test_deletion_subcycle_against_literal_enumeration():
    for length in (1, 2, 3, 4):
        expected = subsequences_of_rotations(BIG, length)
        universe = itertools.permutations(list(BIG), length)
        for cand in universe:
            got = is_deletion_subcycle(cand, BIG)
            assert got == (Cycle(cand) in expected), cand


def test_noncrossing_worked_examples():
    assert are_noncrossing((3, 6, 4), (5, 9, 2), BIG)
    assert not are_noncrossing((3, 2, 4), (5, 9, 6), BIG)


def test_noncrossing_preconditions():
    with pytest.raises(PreconditionError):
        are_noncrossing((3, 6), (6, 4), BIG)  # overlap
    with pytest.raises(PreconditionError):
        are_noncrossing((3, 4, 6), (5, 9, 2), BIG)  # not a subcycle


def crossing_by_four_cycle_enumeration(a, b, c):
    """Literal oracle: a four-cycle (i j k l) obtainable from c by deletion
    with i, k in a and j, l in b."""
    in_a = set(a)
    in_b = set(b)
    for quad in subsequences_of_rotations(c, 4):
        i, j, k, l = tuple(quad)
        for (p, q, r, s) in [(i, j, k, l), (j, k, l, i), (k, l, i, j), (l, i, j, k)]:
            if p in in_a and r in in_a and q in in_b and s in in_b:
                return True
    return False


def random_disjoint_subcycles(rng, c):
    m = len(tuple(c))
    pts = tuple(c)
    idx = list(range(m))
    rng.shuffle(idx)
    na = rng.randrange(1, m)
    nb = rng.randrange(1, m - na + 1)
    a_idx = sorted(idx[:na])
    b_idx = sorted(idx[na : na + nb])
    return [pts[i] for i in a_idx], [pts[i] for i in b_idx]


def test_noncrossing_against_literal_oracle():
    rng = random.Random(17)
    for _ in range(300):
        m = rng.randrange(2, 9)
        pts = rng.sample(range(1, 10), m)
        c = Cycle(pts)
        a, b = random_disjoint_subcycles(rng, c)
        got = are_noncrossing(a, b, c)
        assert got == (not crossing_by_four_cycle_enumeration(a, b, c))


def test_crossing_witness_structure():
    w = crossing_witness((3, 2, 4), (5, 9, 6), BIG)
    assert w is not None
    i, j, k, l = w
    assert {i, k} <= set((3, 2, 4)) and {j, l} <= set((5, 9, 6))
    assert is_deletion_subcycle((i, j, k, l), BIG)
    assert crossing_witness((3, 6, 4), (5, 9, 2), BIG) is None


def test_crossing_witness_always_valid_on_random_input():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.randrange(2, 9)
        c = Cycle(rng.sample(range(1, 10), m))
        a, b = random_disjoint_subcycles(rng, c)
        w = crossing_witness(a, b, c)
        if w is None:
            assert are_noncrossing(a, b, c)
        else:
            i, j, k, l = w
            assert {i, k} <= set(a) and {j, l} <= set(b)
            assert is_deletion_subcycle((i, j, k, l), c)
            assert not are_noncrossing(a, b, c)
