"""Tests for the absolute order: the two order tests, P_n, noncrossing
partition intervals, constrained families, and Hasse exports."""

import itertools
import math
import random

import pytest

from absorder.errors import DegreeMismatchError, PreconditionError, ResourceCapError
from absorder.order import (
    RSpec,
    build_Pn,
    enumerate_SnR,
    hasse_export,
    ideal_generated,
    leq_length,
    leq_noncrossing,
    nc_interval,
    nc_interval_by_filter,
    pn_cover_pairs,
    poset_dot,
    poset_json,
    poset_over,
    rank_generating_polynomial,
    rank_polynomial_product,
    satisfies_rspec,
)
from absorder.perms import Permutation, identity, sn_elements


def catalan(k):
    return math.comb(2 * k, k) // (k + 1)


# ----- the two order tests --------------------------------------------------


def test_leq_routes_agree_exhaustively_up_to_degree_4():
    for n in range(1, 5):
        for u in sn_elements(n):
            for v in sn_elements(n):
                assert leq_length(u, v) == leq_noncrossing(u, v), (u, v)


def test_leq_spot_values():
    e = identity(4)
    c4 = Permutation.from_cycles(4, [(1, 2, 3, 4)])
    for w in sn_elements(4):
        assert leq_length(e, w) and leq_noncrossing(e, w)
        assert leq_length(w, w) and leq_noncrossing(w, w)
    # (1 2)(3 4) sits below the 4-cycle, (1 3)(2 4) crosses itself out of it
    below = Permutation.from_cycles(4, [(1, 2), (3, 4)])
    crossing = Permutation.from_cycles(4, [(1, 3), (2, 4)])
    assert leq_length(below, c4) and leq_noncrossing(below, c4)
    assert not leq_length(crossing, c4)
    assert not leq_noncrossing(crossing, c4)


def test_leq_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        leq_length(identity(3), identity(4))
    with pytest.raises(DegreeMismatchError):
        leq_noncrossing(identity(3), identity(4))


def test_leq_is_invariant_under_conjugation():
    rng = random.Random(7)
    perms5 = sn_elements(5)
    for _ in range(300):
        u, v, g = (rng.choice(perms5) for _ in range(3))
        gu = g * u * g.inverse()
        gv = g * v * g.inverse()
        assert leq_length(u, v) == leq_length(gu, gv)


# ----- the poset P_n ---------------------------------------------------------


def test_p3_structure():
    P = build_Pn(3)
    assert len(P.elements) == 6
    assert P.bottom() == P.index(identity(3))
    assert P.top() is None  # two maximal elements, the 3-cycles
    assert len(P.covers()) == 9
    assert P.is_graded()
    P.check_partial_order()


def test_p4_rank_sizes():
    P = build_Pn(4)
    counts = [0] * 4
    for r in P.ranks:
        counts[r] += 1
    assert counts == [1, 6, 11, 6]


def test_rank_polynomial_routes_agree():
    for n in range(1, 7):
        assert rank_generating_polynomial(n) == rank_polynomial_product(n)
    assert rank_polynomial_product(4) == [1, 6, 11, 6]


def test_build_pn_validation():
    with pytest.raises(ValueError):
        build_Pn(0)
    with pytest.raises(ResourceCapError):
        build_Pn(10)
    with pytest.raises(ResourceCapError):
        build_Pn(3, cap=2)


def test_poset_over_rejects_mixed_degrees():
    with pytest.raises(DegreeMismatchError):
        poset_over([identity(3), identity(4)])


# ----- noncrossing partition intervals ---------------------------------------


def test_nc_interval_has_catalan_size():
    for k in range(1, 7):
        c = Permutation.from_cycles(k, [tuple(range(1, k + 1))])
        assert len(nc_interval(c).elements) == catalan(k)


def test_nc_interval_respects_fixed_points():
    c = Permutation.from_cycles(5, [(1, 2, 3)])
    P = nc_interval(c)
    assert len(P.elements) == catalan(3)
    for w in P.elements:
        assert w(4) == 4 and w(5) == 5


def test_nc_interval_matches_filter_route():
    cases = [
        Permutation.from_cycles(4, [(1, 2, 3, 4)]),
        Permutation.from_cycles(5, [(1, 2, 3, 4, 5)]),
        Permutation.from_cycles(5, [(3, 5, 1, 4, 2)]),
        Permutation.from_cycles(5, [(2, 4, 5)]),
        identity(3),
    ]
    for c in cases:
        P = nc_interval(c)
        Q = nc_interval_by_filter(c)
        assert list(P.elements) == list(Q.elements)
        assert P.covers() == Q.covers()


def test_nc_interval_maximal_chain_count():
    # the noncrossing partition lattice of a k-cycle has k^(k-2) maximal chains
    for k in range(3, 6):
        c = Permutation.from_cycles(k, [tuple(range(1, k + 1))])
        assert len(nc_interval(c).maximal_chains()) == k ** (k - 2)


def test_nc_interval_needs_a_single_cycle():
    with pytest.raises(PreconditionError):
        nc_interval(Permutation.from_cycles(4, [(1, 2), (3, 4)]))


# ----- constrained families --------------------------------------------------


def test_rspec_validation():
    with pytest.raises(ValueError):
        RSpec(4, ())
    with pytest.raises(ValueError):
        RSpec(4, (1, 1))
    with pytest.raises(ValueError):
        RSpec(4, (1,), (frozenset({1}),))
    with pytest.raises(ValueError):
        RSpec(4, (1,), (frozenset(), frozenset()))
    with pytest.raises(ValueError):
        RSpec(4, (1,), (frozenset({5}),))
    with pytest.raises(ValueError):
        RSpec(4, (1,), (frozenset(), frozenset({2}), frozenset({2, 3})))


def test_rspec_tau_family_is_unordered():
    a = RSpec(5, (1,), (frozenset(), frozenset({4, 5}), frozenset({2, 3})))
    b = RSpec(5, (1,), (frozenset(), frozenset({2, 3}), frozenset({4, 5})))
    assert a == b
    assert a.taus == (frozenset(), frozenset({2, 3}), frozenset({4, 5}))


def test_rspec_properties():
    r = RSpec(6, (1, 2), (frozenset({3}), frozenset({5, 6})))
    assert r.k == 1
    assert r.m == 1
    assert r.used() == frozenset({1, 2, 3, 5, 6})
    assert r.free() == (4,)
    assert r.to_json() == {"n": 6, "sigma": [1, 2], "taus": [[3], [5, 6]]}
    assert RSpec(3, (1,)).taus == (frozenset(),)


def test_enumerate_single_cycle_counts():
    # sigma = (1): all n-cycles, (n-1)! of them
    for n in range(1, 6):
        family = enumerate_SnR(RSpec(n, (1,)))
        assert len(family) == math.factorial(n - 1)
        assert all(len(w.cycles()) == 1 for w in family)
    # pinning w(1) = 2 inside the single cycle leaves (n-2)! choices
    for n in range(2, 6):
        family = enumerate_SnR(RSpec(n, (1, 2)))
        assert len(family) == math.factorial(n - 2)
        assert all(w(1) == 2 for w in family)


def test_enumerate_with_tau_blocks():
    r = RSpec(4, (1,), (frozenset(), frozenset({3, 4})))
    family = enumerate_SnR(r)
    # c_0 = {1}, c_1 a 3-cycle on {2,3,4} (2 ways), or c_0 = (1 2), c_1 = (3 4)
    assert len(family) == 3
    for w in family:
        assert satisfies_rspec(w, r)
        assert len(w.cycles()) == 2
    assert family == sorted(family)


def test_satisfies_rspec_details():
    r = RSpec(5, (1, 2), (frozenset({4}),))
    good = Permutation.from_cycles(5, [(1, 2, 4, 3, 5)])
    assert satisfies_rspec(good, r)
    # wrong image of 1
    assert not satisfies_rspec(Permutation.from_cycles(5, [(1, 3, 2, 4, 5)]), r)
    # 4 not in the sigma cycle
    two_cycles = Permutation.from_cycles(5, [(1, 2, 3), (4, 5)])
    assert not satisfies_rspec(two_cycles, r)
    with pytest.raises(DegreeMismatchError):
        satisfies_rspec(identity(4), r)


def test_ideal_generated_matches_interval():
    P = build_Pn(4)
    c4 = Permutation.from_cycles(4, [(1, 2, 3, 4)])
    ideal = ideal_generated(P, [c4])
    assert len(ideal.members) == catalan(4)
    assert ideal.rank == 3
    assert ideal.member_elements() == list(nc_interval(c4).elements)
    with pytest.raises(ValueError):
        ideal_generated(P, [])


# ----- exports ---------------------------------------------------------------


def test_layered_cover_pairs_match_matrix_route():
    for n in (4, 5):
        assert pn_cover_pairs(n) == sorted(map(tuple, build_Pn(n).covers()))


def test_hasse_export_is_deterministic_and_consistent():
    assert hasse_export(4, "json") == hasse_export(4, "json")
    assert hasse_export(4, "dot") == hasse_export(4, "dot")
    assert hasse_export(4, "json") == poset_json(build_Pn(4))
    assert hasse_export(4, "dot") == poset_dot(build_Pn(4))


def test_hasse_export_validation():
    with pytest.raises(ResourceCapError):
        hasse_export(10)
    with pytest.raises(ValueError):
        hasse_export(0)
    with pytest.raises(ValueError):
        hasse_export(3, "svg")


def test_dot_output_shape():
    dot = hasse_export(3, "dot")
    assert dot.startswith("digraph hasse {")
    assert dot.endswith("}\n")
    assert dot.count("rank=same") == 3
    assert '"(1 2)" -> "(1 2 3)";' in dot
    assert '"()" -> "(1 2)";' in dot


def test_json_output_shape():
    d = hasse_export(3, "json")
    assert d["n"] == 3
    assert d["elements"][0] == [1, 2, 3]
    assert sorted(d["ranks"]) == [0, 1, 1, 1, 2, 2]
    assert len(d["covers"]) == 9
    assert all(d["ranks"][j] == d["ranks"][i] + 1 for i, j in d["covers"])
