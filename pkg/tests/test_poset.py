"""Generic poset machinery on small hand-checkable examples."""

import itertools

import numpy as np
import pytest

from absorder.poset import TOP, Poset, product, product_many


def divisibility_poset(top):
    elems = list(range(1, top + 1))
    m = np.array([[b % a == 0 for b in elems] for a in elems])
    return Poset(elems, matrix=m)


def chain_poset(k):
    elems = list(range(k))
    m = np.array([[a <= b for b in elems] for a in elems])
    return Poset(elems, matrix=m, ranks=elems)


def antichain_poset(k):
    return Poset(list(range(k)), matrix=np.eye(k, dtype=bool))


def test_constructor_validation():
    with pytest.raises(ValueError):
        Poset([1, 2])
    with pytest.raises(ValueError):
        Poset([1, 1], matrix=np.eye(2, dtype=bool))


def test_divisibility_structure():
    P = divisibility_poset(12)
    P.check_partial_order()
    assert P.leq_elems(3, 12)
    assert not P.leq_elems(5, 12)
    assert P.bottom() == P.index(1)
    assert P.top() is None
    assert sorted(P.elements[i] for i in P.maximal_indices()) == [7, 8, 9, 10, 11, 12]
    covers = {(P.elements[i], P.elements[j]) for i, j in P.covers()}
    assert (1, 2) in covers and (2, 4) in covers and (6, 12) in covers
    assert (1, 4) not in covers and (2, 12) not in covers
    assert (3, 6) in covers


def test_covers_by_rank_equals_generic():
    # boolean lattice on 3 atoms, ranks = popcount
    elems = list(range(8))
    m = np.array([[a & b == a for b in elems] for a in elems])
    ranks = [bin(x).count("1") for x in elems]
    graded = Poset(elems, matrix=m, ranks=ranks)
    plain = Poset(elems, matrix=m.copy())
    assert graded.covers() == plain.covers()
    assert len(graded.covers()) == 12  # 3 * 2^2 edges of the cube


def test_leq_fn_backed_poset_matches_matrix():
    elems = list(range(1, 9))
    fn = lambda i, j: elems[j] % elems[i] == 0
    P = Poset(elems, leq_fn=fn)
    Q = divisibility_poset(8)
    assert np.array_equal(P.matrix(), Q.matrix())
    assert P.covers() == Q.covers()


def test_bottom_top_chain():
    C = chain_poset(5)
    assert C.bottom() == 0
    assert C.top() == 4
    assert C.poset_rank() == 4
    assert C.is_graded()
    A = antichain_poset(3)
    assert A.bottom() is None
    assert A.top() is None
    assert A.poset_rank() == 0


def test_chains_enumeration():
    C = chain_poset(3)
    chains = set(C.chains())
    assert chains == {
        (0,), (1,), (2,),
        (0, 1), (0, 2), (1, 2),
        (0, 1, 2),
    }
    assert C.maximal_chains() == [(0, 1, 2)]
    A = antichain_poset(4)
    assert set(A.chains()) == {(i,) for i in range(4)}
    assert len(A.maximal_chains()) == 4


def test_chain_count_of_boolean_lattice():
    # ordered set partitions style count: number of chains in B_2 = 11
    elems = [0, 1, 2, 3]
    m = np.array([[a & b == a for b in elems] for a in elems])
    B2 = Poset(elems, matrix=m)
    assert sum(1 for _ in B2.chains()) == 11
    assert len(B2.maximal_chains()) == 2


def test_not_graded_detected():
    # bottom, a long side through 1 < 2 and a short side through 3
    #     4
    #    / \
    #   2   |
    #   1   3
    #    \ /
    #     0
    m = np.zeros((5, 5), dtype=bool)
    order = {(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (0, 2), (0, 4), (1, 4)}
    for i in range(5):
        m[i, i] = True
    for i, j in order:
        m[i, j] = True
    P = Poset([0, 1, 2, 3, 4], matrix=m)
    P.check_partial_order()
    assert not P.is_graded()
    assert P.poset_rank() == 3


def test_restrict():
    P = divisibility_poset(12)
    Q = P.restrict([P.index(x) for x in (1, 2, 4, 8, 3)])
    assert Q.elements == (1, 2, 3, 4, 8)  # induced, in index order
    Q.check_partial_order()
    assert Q.leq_elems(2, 8)
    assert not Q.leq_elems(3, 8)
    assert Q.bottom() == Q.index(1)


def test_with_top():
    A = antichain_poset(3)
    T = A.with_top()
    assert T.top() == 3
    assert T.elements[3] is TOP
    for i in range(3):
        assert T.leq(i, 3)
    T.check_partial_order()
    with pytest.raises(ValueError):
        T.with_top()  # TOP label already present


def test_product_of_chains_is_grid():
    G = product(chain_poset(2), chain_poset(3))
    G.check_partial_order()
    assert len(G) == 6
    assert G.bottom() == G.index((0, 0))
    assert G.top() == G.index((1, 2))
    assert G.leq_elems((0, 1), (1, 2))
    assert not G.leq_elems((1, 0), (0, 2))
    assert G.poset_rank() == 3
    assert G.is_graded()
    # maximal chains of a (1,2) grid: binomial(3,1) = 3
    assert len(G.maximal_chains()) == 3


def test_product_many_flat_labels():
    P = product_many([chain_poset(2), chain_poset(2), chain_poset(2)])
    assert len(P) == 8
    assert P.elements[0] == (0, 0, 0)
    assert P.leq_elems((0, 0, 0), (1, 1, 1))
    assert not P.leq_elems((1, 0, 0), (0, 1, 1))
    # the cube's chain structure matches the boolean lattice
    assert len(P.maximal_chains()) == 6


def test_product_ranks():
    G = product(chain_poset(3), chain_poset(3))
    for i, (a, b) in enumerate(G.elements):
        assert G.ranks[i] == a + b
