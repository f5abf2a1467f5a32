"""The absolute order on the symmetric group.

``u <= v`` holds when reflection lengths add up along the way from u to v:
l(u) + l(u^-1 v) = l(v), with l counted in the generating set of all
transpositions.  Equivalently (leq_noncrossing) every cycle of u is a
deletion-subcycle of a cycle of v, and cycles of u landing in the same
cycle c of v are pairwise noncrossing in c.  Both tests are exposed and the
suite checks them against each other; the length test is the default since
it is a pair of cycle counts.

The test is composition-convention independent: with the other convention
the quotient u^-1 v becomes v u^-1, a conjugate of it, and conjugate
permutations have equal reflection length.

This poset is graded by reflection length, has the identity as minimum, the
n-cycles as maximal elements, and rank generating polynomial
(1+q)(1+2q)...(1+(n-1)q).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .cycles import Cycle, are_noncrossing, is_deletion_subcycle
from .errors import DegreeMismatchError, PreconditionError, ResourceCapError
from .perms import Permutation, identity, sn_elements
from .poset import Poset

DEFAULT_POSET_CAP = 9
MATRIX_DEGREE_CAP = 7  # materialize the full leq matrix only up to S_7


def leq_length(u: Permutation, v: Permutation) -> bool:
    """Order test via reflection lengths: l(u) + l(u^-1 v) = l(v)."""
    if u.n != v.n:
        raise DegreeMismatchError("degrees differ: %d and %d" % (u.n, v.n))
    return u.reflection_length() + (u.inverse() * v).reflection_length() \
        == v.reflection_length()


def leq_noncrossing(u: Permutation, v: Permutation) -> bool:
    """Order test via cycle containment and noncrossing placement.

    Each cycle of u must be a deletion-subcycle of a single cycle of v (the
    assignment is forced because cycles of v are disjoint), and u-cycles
    assigned to the same v-cycle must be pairwise noncrossing there.
    """
    if u.n != v.n:
        raise DegreeMismatchError("degrees differ: %d and %d" % (u.n, v.n))
    vcycles = [Cycle(c) for c in v.cycles()]
    owner = {}
    for ci, c in enumerate(vcycles):
        for p in c.points:
            owner[p] = ci
    grouped: dict[int, list[Cycle]] = {}
    for raw in u.cycles():
        homes = {owner[p] for p in raw}
        if len(homes) > 1:
            return False
        ci = homes.pop()
        a = Cycle(raw)
        if not is_deletion_subcycle(a, vcycles[ci]):
            return False
        grouped.setdefault(ci, []).append(a)
    for ci, cycles_here in grouped.items():
        c = vcycles[ci]
        for a, b in itertools.combinations(cycles_here, 2):
            if not are_noncrossing(a, b, c):
                return False
    return True


# ----- the full poset P_n ------------------------------------------------


def _perm_array(perms: Sequence[Permutation]) -> np.ndarray:
    """(N, n) int8 array of 0-indexed images for the kernels."""
    return np.array([[j - 1 for j in w.images] for w in perms], dtype=np.int8)


def build_Pn(n: int, cap: int = DEFAULT_POSET_CAP) -> Poset:
    """The absolute order on all of S_n, elements in one-line lex order.

    Up to degree MATRIX_DEGREE_CAP the full boolean leq matrix is
    materialized through the kernels; past that comparisons are computed on
    demand (slower, but n! * n! bits stops being storable).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise ResourceCapError(
            "build_Pn(%d) exceeds cap %d; pass a larger cap to insist" % (n, cap)
        )
    elements = sn_elements(n)
    ranks = [w.reflection_length() for w in elements]
    if n <= MATRIX_DEGREE_CAP:
        matrix = kernels.leq_table(_perm_array(elements))
        return Poset(elements, matrix=matrix, ranks=ranks)
    leq_fn = lambda i, j: leq_length(elements[i], elements[j])
    return Poset(elements, leq_fn=leq_fn, ranks=ranks)


def poset_over(perms: Sequence[Permutation]) -> Poset:
    """Absolute-order poset on an explicit list of same-degree permutations."""
    perms = list(perms)
    if not perms:
        raise ValueError("need at least one permutation")
    degrees = {w.n for w in perms}
    if len(degrees) != 1:
        raise DegreeMismatchError("mixed degrees %s" % sorted(degrees))
    matrix = kernels.leq_table(_perm_array(perms))
    ranks = [w.reflection_length() for w in perms]
    return Poset(perms, matrix=matrix, ranks=ranks)


def rank_generating_polynomial(n: int) -> list[int]:
    """Coefficients of sum_w q^(reflection length), found by counting."""
    counts = [0] * n
    for p in itertools.permutations(range(n)):
        counts[n - kernels.cycle_count(p)] += 1
    return counts


def rank_polynomial_product(n: int) -> list[int]:
    """Coefficients of (1+q)(1+2q)...(1+(n-1)q), the closed product form."""
    coeffs = [1]
    for i in range(1, n):
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += c
            nxt[d + 1] += c * i
        coeffs = nxt
    return coeffs


# ----- noncrossing partition intervals ------------------------------------


def nc_interval(c: Permutation) -> Poset:
    """The interval [identity, c] for a permutation c with at most one
    nontrivial cycle, ordered by the absolute order.

    The elements below such a c are exactly: fix whatever c fixes, choose a
    noncrossing partition of c's cycle (drawn as a circle), and turn each
    block into a cycle in the induced cyclic order.  So the interval has
    Catalan(k) elements for a k-cycle and is the noncrossing partition
    lattice of that circle.
    """
    nontrivial = c.nontrivial_cycles()
    if len(nontrivial) > 1:
        raise PreconditionError(
            "nc_interval needs a single cycle (plus fixed points), got %s" % c
        )
    circle = nontrivial[0] if nontrivial else (1,) if c.n else ()
    members = [
        Permutation.from_cycles(c.n, blocks)
        for blocks in _noncrossing_block_families(circle)
    ]
    members.sort()
    return poset_over(members)


def _noncrossing_block_families(circle: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """All noncrossing partitions of the cyclic word ``circle``, each block
    listed in the induced cyclic order."""
    circle = tuple(circle)
    if not circle:
        yield []
        return
    first, rest = circle[0], circle[1:]
    # the block through `first` picks an increasing subset of positions in
    # `rest`; the gaps between consecutive picks are partitioned on their own
    for picks in _increasing_subsets(len(rest)):
        block = (first,) + tuple(rest[i] for i in picks)
        gaps = []
        prev = 0
        for i in picks:
            gaps.append(rest[prev:i])
            prev = i + 1
        gaps.append(rest[prev:])
        for combo in itertools.product(
            *(_noncrossing_block_families(gap) for gap in gaps)
        ):
            family = [block]
            for sub in combo:
                family.extend(sub)
            yield family


def _increasing_subsets(n: int) -> Iterator[tuple[int, ...]]:
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def nc_interval_by_filter(c: Permutation) -> Poset:
    """Oracle route for nc_interval: filter all of S_n by the order test."""
    members = [w for w in sn_elements(c.n) if leq_length(w, c)]
    return poset_over(members)


# ----- constrained generator families and ideals ---------------------------


@dataclass(frozen=True)
class RSpec:
    """A constraint (sigma, tau_0, ..., tau_k) on permutations of degree n.

    S_n(R) is the set of w with exactly k+1 cycles c_0, ..., c_k (fixed
    points count), where sigma's entries appear consecutively in c_0 in
    sigma's order (w maps each sigma entry to the next) and tau_i's entries
    lie in c_i.  taus[0] may be empty; the later taus must not be.
    """

    n: int
    sigma: tuple[int, ...]
    taus: tuple[frozenset[int], ...] = (frozenset(),)

    def __post_init__(self):
        sigma = tuple(self.sigma)
        taus = tuple(frozenset(t) for t in self.taus)
        if not taus:
            taus = (frozenset(),)
        # tau_1..tau_k is an unordered family; store it canonically
        taus = (taus[0],) + tuple(sorted(taus[1:], key=min))
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "taus", taus)
        if not sigma:
            raise ValueError("sigma must be nonempty")
        if len(set(sigma)) != len(sigma):
            raise ValueError("sigma entries must be distinct")
        used = set(sigma)
        for i, t in enumerate(taus):
            if i > 0 and not t:
                raise ValueError("tau_%d must be nonempty" % i)
            if t & used:
                raise ValueError("tau_%d overlaps earlier entries" % i)
            used |= t
        for a in used:
            if not (1 <= a <= self.n):
                raise ValueError("entry %d out of range 1..%d" % (a, self.n))

    @property
    def k(self) -> int:
        return len(self.taus) - 1

    def used(self) -> frozenset[int]:
        return frozenset(self.sigma).union(*self.taus)

    def free(self) -> tuple[int, ...]:
        used = self.used()
        return tuple(a for a in range(1, self.n + 1) if a not in used)

    @property
    def m(self) -> int:
        return len(self.free())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": list(self.sigma),
            "taus": [sorted(t) for t in self.taus],
        }


def satisfies_rspec(w: Permutation, rspec: RSpec) -> bool:
    """Membership test for S_n(R); see RSpec."""
    if w.n != rspec.n:
        raise DegreeMismatchError("degree %d vs RSpec degree %d" % (w.n, rspec.n))
    cycles = w.cycles()
    if len(cycles) != rspec.k + 1:
        return False
    sigma = rspec.sigma
    for a, b in zip(sigma, sigma[1:]):
        if w(a) != b:
            return False
    owner = {}
    for ci, c in enumerate(cycles):
        for p in c:
            owner[p] = ci
    c0 = owner[sigma[0]]
    if any(owner[a] != c0 for a in rspec.taus[0]):
        return False
    taken = {c0}
    for t in rspec.taus[1:]:
        homes = {owner[a] for a in t}
        if len(homes) != 1:
            return False
        home = homes.pop()
        if home in taken:
            return False
        taken.add(home)
    return True


def enumerate_SnR(rspec: RSpec) -> list[Permutation]:
    """All of S_n(R) in one-line lex order, by scanning S_n."""
    return [w for w in sn_elements(rspec.n) if satisfies_rspec(w, rspec)]


@dataclass(frozen=True)
class Ideal:
    """A downward-closed subset of a poset, stored as member indices."""

    poset: Poset
    members: frozenset[int]

    def as_poset(self) -> Poset:
        return self.poset.restrict(self.members)

    def member_elements(self) -> list:
        return [self.poset.elements[i] for i in sorted(self.members)]

    @property
    def rank(self) -> int:
        if self.poset.ranks is None:
            return self.as_poset().poset_rank()
        return max(self.poset.ranks[i] for i in self.members)


def ideal_generated(P: Poset, generators: Iterable) -> Ideal:
    """The downward closure of the given elements (labels) in P."""
    gen_idx = [P.index(g) for g in generators]
    if not gen_idx:
        raise ValueError("need at least one generator")
    m = P.matrix()
    mask = m[:, gen_idx].any(axis=1)
    return Ideal(P, frozenset(int(i) for i in np.nonzero(mask)[0]))


# ----- exports -------------------------------------------------------------


def _hasse_json(n, elements, ranks, covers) -> dict:
    return {
        "n": n,
        "elements": [list(w.images) for w in elements],
        "ranks": list(ranks) if ranks is not None else None,
        "covers": [list(c) for c in covers],
    }


def _hasse_dot(labels, ranks, covers) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    if ranks is not None:
        layers: dict[int, list[int]] = {}
        for i, r in enumerate(ranks):
            layers.setdefault(r, []).append(i)
        for r in sorted(layers):
            row = " ".join('"%s";' % labels[i] for i in layers[r])
            lines.append("  { rank=same; %s }" % row)
    for i, j in covers:
        lines.append('  "%s" -> "%s";' % (labels[i], labels[j]))
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_json(P: Poset) -> dict:
    """JSON form of a poset over permutations: one-line elements, ranks,
    covers as index pairs."""
    elements = list(P.elements)
    n = elements[0].n if isinstance(elements[0], Permutation) else None
    return _hasse_json(n, elements, P.ranks, sorted(map(tuple, P.covers())))


def poset_dot(P: Poset) -> str:
    """Graphviz DOT for the Hasse diagram, one rank per layer, bottom up."""
    labels = [
        w.cycle_str() if isinstance(w, Permutation) else str(w)
        for w in P.elements
    ]
    return _hasse_dot(labels, P.ranks, sorted(map(tuple, P.covers())))


def pn_cover_pairs(n: int) -> list[tuple[int, int]]:
    """Cover pairs of P_n as index pairs into sn_elements(n).

    The order is graded by reflection length, so covers are exactly the
    related pairs one rank apart; comparing adjacent rank layers against
    each other keeps the working set far below the full n! x n! table.
    """
    elements = sn_elements(n)
    arr = _perm_array(elements)
    ranks = np.array([w.reflection_length() for w in elements])
    layers = [np.nonzero(ranks == r)[0] for r in range(n)]
    pairs: list[tuple[int, int]] = []
    for low, high in zip(layers, layers[1:]):
        block = kernels.leq_cross(arr[low], arr[high])
        for ai, bi in zip(*np.nonzero(block)):
            pairs.append((int(low[ai]), int(high[bi])))
    pairs.sort()
    return pairs


def hasse_export(n: int, fmt: str = "dot", cap: int = DEFAULT_POSET_CAP):
    """Hasse diagram of P_n as a DOT string or a JSON-ready dict.

    Uses the full order matrix up to MATRIX_DEGREE_CAP and the layered
    cover computation beyond it; both paths produce identical output.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise ResourceCapError(
            "hasse export of P_%d exceeds cap %d; raise the cap to insist"
            % (n, cap)
        )
    elements = sn_elements(n)
    ranks = [w.reflection_length() for w in elements]
    if n <= MATRIX_DEGREE_CAP:
        covers = sorted(map(tuple, build_Pn(n).covers()))
    else:
        covers = pn_cover_pairs(n)
    if fmt == "dot":
        return _hasse_dot([w.cycle_str() for w in elements], ranks, covers)
    if fmt == "json":
        return _hasse_json(n, elements, ranks, covers)
    raise ValueError("format must be 'dot' or 'json'")
