"""Finite posets on indexed elements.

A Poset stores a tuple of hashable element labels and answers leq queries
on indices, either from a materialized boolean matrix or from a callable.
When ``ranks`` is supplied the poset is promised to be graded by it (every
cover steps rank by exactly one); covers are then read off rank layer by
rank layer, which is how the big symmetric-group posets stay tractable.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np


class Top:
    """Sentinel label for an adjoined maximum element."""

    def __repr__(self):
        return "TOP"

    def __str__(self):
        return "TOP"


TOP = Top()


class Poset:
    def __init__(
        self,
        elements: Sequence[Any],
        *,
        matrix: np.ndarray | None = None,
        leq_fn: Callable[[int, int], bool] | None = None,
        ranks: Sequence[int] | None = None,
    ):
        if matrix is None and leq_fn is None:
            raise ValueError("need a leq matrix or a leq callable")
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("element labels must be distinct")
        self._matrix = matrix
        self._leq_fn = leq_fn
        self.ranks = tuple(ranks) if ranks is not None else None
        self._covers = None
        self._up_lists = None

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self._index[x]

    def leq(self, i: int, j: int) -> bool:
        """Whether elements[i] <= elements[j]."""
        if self._matrix is not None:
            return bool(self._matrix[i, j])
        return bool(self._leq_fn(i, j))

    def leq_elems(self, x, y) -> bool:
        return self.leq(self._index[x], self._index[y])

    def matrix(self) -> np.ndarray:
        """The full boolean leq matrix (materializing it if needed)."""
        if self._matrix is None:
            n = len(self.elements)
            m = np.zeros((n, n), dtype=bool)
            for i in range(n):
                for j in range(n):
                    m[i, j] = self._leq_fn(i, j)
            self._matrix = m
        return self._matrix

    # ----- structure ---------------------------------------------------

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations (i, j) with elements[i] covered by elements[j]."""
        if self._covers is None:
            if self.ranks is not None:
                self._covers = self._covers_by_rank()
            else:
                self._covers = self._covers_generic()
        return self._covers

    def _covers_by_rank(self) -> list[tuple[int, int]]:
        layers: dict[int, list[int]] = {}
        for i, r in enumerate(self.ranks):
            layers.setdefault(r, []).append(i)
        out = []
        m = self.matrix()
        for r in sorted(layers):
            if r + 1 not in layers:
                continue
            lo = np.array(layers[r])
            hi = np.array(layers[r + 1])
            sub = m[np.ix_(lo, hi)]
            for a, b in zip(*np.nonzero(sub)):
                out.append((int(lo[a]), int(hi[b])))
        out.sort()
        return out

    def _covers_generic(self) -> list[tuple[int, int]]:
        m = self.matrix()
        n = len(self.elements)
        strict = m & ~np.eye(n, dtype=bool)
        out = []
        for i in range(n):
            for j in np.nonzero(strict[i])[0]:
                # i < j is a cover iff nothing sits strictly between
                if not np.any(strict[i] & strict[:, j]):
                    out.append((i, int(j)))
        out.sort()
        return out

    def up_lists(self) -> list[list[int]]:
        """For each i, the sorted list of j != i with elements[i] < elements[j]."""
        if self._up_lists is None:
            m = self.matrix()
            n = len(self.elements)
            strict = m & ~np.eye(n, dtype=bool)
            self._up_lists = [list(map(int, np.nonzero(strict[i])[0])) for i in range(n)]
        return self._up_lists

    def bottom(self) -> int | None:
        """Index of the unique minimum, or None."""
        n = len(self.elements)
        mins = [i for i in range(n) if all(not self.leq(j, i) for j in range(n) if j != i)]
        if len(mins) == 1 and all(self.leq(mins[0], j) for j in range(n)):
            return mins[0]
        return None

    def top(self) -> int | None:
        """Index of the unique maximum, or None."""
        n = len(self.elements)
        maxs = [i for i in range(n) if all(not self.leq(i, j) for j in range(n) if j != i)]
        if len(maxs) == 1 and all(self.leq(j, maxs[0]) for j in range(n)):
            return maxs[0]
        return None

    def maximal_indices(self) -> list[int]:
        n = len(self.elements)
        return [
            i for i in range(n)
            if not any(self.leq(i, j) for j in range(n) if j != i)
        ]

    # ----- chains -------------------------------------------------------

    def chains(self) -> Iterator[tuple[int, ...]]:
        """All nonempty chains, each as an index tuple in increasing order."""
        ups = self.up_lists()

        def extend(chain):
            yield tuple(chain)
            for j in ups[chain[-1]]:
                chain.append(j)
                yield from extend(chain)
                chain.pop()

        for i in range(len(self.elements)):
            yield from extend([i])

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """Chains not contained in any longer chain."""
        m = self.matrix()
        comparable = m | m.T
        out = []
        for chain in self.chains():
            cols = comparable[:, list(chain)].all(axis=1)
            cols[list(chain)] = False
            if not cols.any():
                out.append(chain)
        return out

    def poset_rank(self) -> int:
        """Length of the longest chain (number of elements minus one)."""
        longest = 0
        order = sorted(range(len(self.elements)), key=self._height_key())
        height = [0] * len(self.elements)
        ups = self.up_lists()
        # longest chain by DP downward: process in reverse linear-extension order
        for i in reversed(order):
            h = 0
            for j in ups[i]:
                h = max(h, 1 + height[j])
            height[i] = h
            longest = max(longest, h)
        return longest

    def _height_key(self):
        if self.ranks is not None:
            r = self.ranks
            return lambda i: r[i]
        m = self.matrix()
        downsizes = m.sum(axis=0)
        return lambda i: int(downsizes[i])

    def is_graded(self) -> bool:
        """Whether all maximal chains have the same length."""
        lengths = {len(c) for c in self.maximal_chains()}
        return len(lengths) <= 1

    def check_partial_order(self) -> None:
        """Assert reflexivity, antisymmetry and transitivity (test helper)."""
        m = self.matrix()
        n = len(self.elements)
        assert all(m[i, i] for i in range(n)), "not reflexive"
        assert not np.any(m & m.T & ~np.eye(n, dtype=bool)), "not antisymmetric"
        closure = m
        assert not np.any((closure @ closure) & ~closure), "not transitive"

    # ----- derived posets ------------------------------------------------

    def restrict(self, indices: Iterable[int]) -> "Poset":
        """Induced subposet on the given element indices (order preserved)."""
        idx = sorted(set(indices))
        sub_elements = [self.elements[i] for i in idx]
        if self._matrix is not None:
            sub = self._matrix[np.ix_(idx, idx)].copy()
        else:
            sub = np.zeros((len(idx), len(idx)), dtype=bool)
            for a, i in enumerate(idx):
                for b, j in enumerate(idx):
                    sub[a, b] = self._leq_fn(i, j)
        ranks = [self.ranks[i] for i in idx] if self.ranks is not None else None
        return Poset(sub_elements, matrix=sub, ranks=ranks)

    def with_top(self, label=TOP) -> "Poset":
        """The poset with a new maximum element adjoined."""
        if label in self._index:
            raise ValueError("label %r already present" % (label,))
        n = len(self.elements)
        m = self.matrix()
        big = np.zeros((n + 1, n + 1), dtype=bool)
        big[:n, :n] = m
        big[:, n] = True
        ranks = None
        if self.ranks is not None:
            ranks = list(self.ranks) + [max(self.ranks, default=-1) + 1]
        return Poset(list(self.elements) + [label], matrix=big, ranks=ranks)


def product(P: Poset, Q: Poset) -> Poset:
    """Direct product; labels are pairs, order is componentwise."""
    elements = [(x, y) for x in P.elements for y in Q.elements]
    m = np.kron(P.matrix().astype(np.uint8), Q.matrix().astype(np.uint8)).astype(bool)
    ranks = None
    if P.ranks is not None and Q.ranks is not None:
        ranks = [rp + rq for rp in P.ranks for rq in Q.ranks]
    return Poset(elements, matrix=m, ranks=ranks)


def product_many(posets: Sequence[Poset]) -> Poset:
    """Iterated direct product with flat tuple labels."""
    if not posets:
        raise ValueError("need at least one factor")
    out = posets[0]
    flat = [(x,) for x in out.elements]
    out = Poset(flat, matrix=out.matrix().copy(), ranks=out.ranks)
    for Q in posets[1:]:
        prod = product(out, Q)
        flat_elements = [x + (y,) for x, y in prod.elements]
        out = Poset(flat_elements, matrix=prod.matrix(), ranks=prod.ranks)
    return out
