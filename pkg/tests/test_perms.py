"""Permutation arithmetic, cycle decomposition, reflection length, parsing."""

import itertools
import random

import pytest

from absorder.errors import DegreeMismatchError, PermutationParseError
from absorder.perms import (
    Permutation,
    all_transpositions,
    parse_permutation,
    sn_elements,
    transposition,
)


def test_construction_and_validation():
    w = Permutation((2, 1, 3))
    assert w.n == 3
    assert w(1) == 2 and w(2) == 1 and w(3) == 3
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1))
    with pytest.raises(ValueError):
        Permutation(())


def test_composition_convention():
    # (uv)(x) = u(v(x)): apply v first
    u = Permutation((2, 1, 3))  # (1 2)
    v = Permutation((1, 3, 2))  # (2 3)
    assert (u * v).images == (2, 3, 1)  # 1->1->2, 2->3->3, 3->2->1
    assert (v * u).images == (3, 1, 2)
    with pytest.raises(DegreeMismatchError):
        u * Permutation((1, 2, 3, 4))


def test_identity_and_inverse():
    e = Permutation.identity(4)
    assert e.images == (1, 2, 3, 4)
    rng = random.Random(7)
    for _ in range(50):
        images = list(range(1, 6))
        rng.shuffle(images)
        w = Permutation(images)
        assert w * w.inverse() == Permutation.identity(5)
        assert w.inverse() * w == Permutation.identity(5)


def test_inverse_antihomomorphism():
    rng = random.Random(11)
    for _ in range(50):
        a = list(range(1, 7))
        b = list(range(1, 7))
        rng.shuffle(a)
        rng.shuffle(b)
        u, v = Permutation(a), Permutation(b)
        assert (u * v).inverse() == v.inverse() * u.inverse()


def test_cycles_canonical_form():
    w = Permutation.from_cycles(6, [(2, 5), (3, 6, 4)])
    # min-first rotation, sorted by minimum, fixed points included
    assert w.cycles() == ((1,), (2, 5), (3, 6, 4))
    assert w.nontrivial_cycles() == ((2, 5), (3, 6, 4))
    assert w.cycle_count() == 3
    assert Permutation.identity(3).cycles() == ((1,), (2,), (3,))


def test_from_cycles_rejects_collisions():
    with pytest.raises(ValueError):
        Permutation.from_cycles(4, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(1, 4)])


def test_reflection_length_small_values():
    assert Permutation.identity(5).reflection_length() == 0
    assert transposition(5, 2, 4).reflection_length() == 1
    assert Permutation.from_cycles(5, [(1, 2, 3, 4, 5)]).reflection_length() == 4
    assert Permutation.from_cycles(5, [(1, 2), (3, 4)]).reflection_length() == 2


def bfs_reflection_lengths(n):
    """Cayley-graph distances from the identity, generators = all
    transpositions.  Independent oracle for reflection_length."""
    gens = all_transpositions(n)
    e = Permutation.identity(n)
    dist = {e: 0}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for t in gens:
                z = t * w
                if z not in dist:
                    dist[z] = dist[w] + 1
                    nxt.append(z)
        frontier = nxt
    return dist


def test_reflection_length_equals_bfs_distance_s4():
    dist = bfs_reflection_lengths(4)
    assert len(dist) == 24
    for w, d in dist.items():
        assert w.reflection_length() == d


def test_support():
    w = Permutation.from_cycles(5, [(2, 4)])
    assert w.support() == frozenset({2, 4})
    assert Permutation.identity(5).support() == frozenset()


def test_string_forms():
    w = Permutation.from_cycles(4, [(1, 3, 2)])
    assert w.one_line_str() == "3 1 2 4"
    assert w.cycle_str() == "(1 3 2)"
    assert w.cycle_str(include_fixed=True) == "(1 3 2)(4)"
    assert Permutation.identity(3).cycle_str() == "()"


def test_parse_cycle_notation():
    assert parse_permutation("(1 2)(3 4)").images == (2, 1, 4, 3)
    assert parse_permutation("(1,2)").images == (2, 1)
    assert parse_permutation("(2 4)", n=5).images == (1, 4, 3, 2, 5)
    assert parse_permutation("()", n=3) == Permutation.identity(3)
    assert parse_permutation("()") == Permutation.identity(1)


def test_parse_one_line_notation():
    assert parse_permutation("2 1 4 3").images == (2, 1, 4, 3)
    assert parse_permutation("2,1").images == (2, 1)
    with pytest.raises(PermutationParseError):
        parse_permutation("2 1 4 3", n=5)


def test_parse_errors():
    for bad in ["", "(1 2", "(1 2)(2 3)", "(0 1)", "1 1 2", "(1 x)", "a b"]:
        with pytest.raises(PermutationParseError):
            parse_permutation(bad)
    with pytest.raises(PermutationParseError):
        parse_permutation("(1 5)", n=3)


def test_parse_roundtrip_via_strings():
    rng = random.Random(3)
    for _ in range(100):
        images = list(range(1, 8))
        rng.shuffle(images)
        w = Permutation(images)
        assert parse_permutation(w.one_line_str()) == w
        assert parse_permutation(w.cycle_str(), n=7) == w


def test_sn_elements_lex_order_and_count():
    s3 = sn_elements(3)
    assert [w.images for w in s3] == [
        (1, 2, 3),
        (1, 3, 2),
        (2, 1, 3),
        (2, 3, 1),
        (3, 1, 2),
        (3, 2, 1),
    ]
    assert len(sn_elements(5)) == 120
    assert len(set(sn_elements(5))) == 120


def test_ordering_and_hash():
    s4 = sn_elements(4)
    assert s4 == sorted(s4)
    assert len({hash(w) for w in s4}) > 1
    assert Permutation((1, 2)) != Permutation((1, 2, 3))


def test_cycle_count_matches_itertools_reference():
    for images in itertools.permutations(range(1, 6)):
        w = Permutation(images)
        # count orbits by hand
        seen = set()
        orbits = 0
        for start in range(1, 6):
            if start in seen:
                continue
            orbits += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = w(x)
        assert w.cycle_count() == orbits
        assert w.reflection_length() == 5 - orbits
