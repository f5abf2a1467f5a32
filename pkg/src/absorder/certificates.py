"""Strong-constructibility certificates for constrained ideals.

An RSpec R = (sigma, tau_0, ..., tau_k) of degree n generates the ideal
I_n(R), the downward closure of S_n(R) in the absolute order.  These
ideals are graded of rank n - k - 1, and each one admits a recursive
decomposition witnessing strong constructibility:

* LEAF (k = 0, no free elements): the ideal is the bounded interval below
  one full cycle, i.e. a noncrossing partition lattice; a shelling of its
  order complex is searched for and re-verified, or the leaf is flagged
  ASSUMED when its facet count exceeds the search cap.
* PRODUCT (k >= 1, no free elements): the ideal factors block by block as
  (ideal on sigma u tau_0, relabeled) x (full absolute order on each
  tau_i); verified by exhibiting the block-restriction bijection and
  checking order preservation both ways.
* UNION, (k+1)-ary (k >= 1, free elements left): add the smallest free
  element j to each tau_i in turn; every intersection of two or more of
  the children equals the single ideal where j is split off into a new
  tau of its own, one rank down.
* UNION over continuations (k = 0, free elements left): append each free
  j to sigma; the intersection over a subset J of children is itself a
  union of ideals (sigma with tau J, and each sigma+(j) with tau J\\{j}),
  certified by folding those in one at a time as binary unions whose
  pairwise intersections split one more element off into its own tau.

Every claim a node makes is checked on materialized element sets:
downward closure, exact union coverage, every required intersection,
order isomorphism for products, boundedness plus a shelling for leaves.
Materialization is capped by degree (default 7); verification refuses to
run on an unmaterialized tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .complexes import order_complex, find_shelling, verify_shelling
from .errors import PreconditionError, ResourceCapError
from .order import RSpec, enumerate_SnR, poset_over
from .perms import Permutation
from .poset import Poset

DEFAULT_MATERIALIZE_CAP = 7
DEFAULT_SHELLING_FACET_CAP = 200

LEAF = "LEAF"
PRODUCT = "PRODUCT"
UNION = "UNION"


@dataclass(frozen=True)
class Certificate:
    """One node of a certificate tree (nodes are shared, so really a DAG)."""

    kind: str
    n: int
    rank: int
    rspec: RSpec | None
    elements: frozenset[Permutation] | None
    children: tuple["Certificate", ...] = ()
    union_mode: str | None = None  # "NARY" | "BINARY"
    # (child-index subset or None for "every subcollection", certificate)
    intersections: tuple[tuple[tuple[int, ...] | None, "Certificate"], ...] = ()
    blocks: tuple[tuple[int, ...], ...] = ()
    shelling: tuple[int, ...] | None = None
    shelling_status: str | None = None  # "FOUND" | "ASSUMED" | "NOT_FOUND"

    def walk(self, seen=None):
        """All distinct nodes, parents before children."""
        if seen is None:
            seen = set()
        if id(self) in seen:
            return
        seen.add(id(self))
        yield self
        for child in self.children:
            yield from child.walk(seen)
        for _, inter in self.intersections:
            yield from inter.walk(seen)


# ----- shared per-degree data ------------------------------------------------


@lru_cache(maxsize=8)
def _degree_data(n: int):
    """(elements, index map, leq matrix) for all of S_n."""
    P = poset_over(_sn(n))
    index = {w: i for i, w in enumerate(P.elements)}
    return P, index


@lru_cache(maxsize=8)
def _sn(n: int) -> tuple[Permutation, ...]:
    from .perms import sn_elements

    return tuple(sn_elements(n))


@lru_cache(maxsize=None)
def _ideal_set(rspec: RSpec) -> frozenset[Permutation]:
    """The materialized ideal I_n(R): downward closure of S_n(R)."""
    P, index = _degree_data(rspec.n)
    gens = enumerate_SnR(rspec)
    if not gens:
        raise PreconditionError("S_n(R) is empty for %r" % (rspec,))
    cols = [index[g] for g in gens]
    mask = P.matrix()[:, cols].any(axis=1)
    return frozenset(P.elements[i] for i in np.nonzero(mask)[0])


def _closure(n: int, members: frozenset[Permutation]) -> frozenset[Permutation]:
    P, index = _degree_data(n)
    cols = [index[w] for w in members]
    mask = P.matrix()[:, cols].any(axis=1)
    return frozenset(P.elements[i] for i in np.nonzero(mask)[0])


def _subposet(n: int, members: frozenset[Permutation]) -> Poset:
    P, index = _degree_data(n)
    return P.restrict(index[w] for w in members)


def _set_rank(members: frozenset[Permutation]) -> int:
    return max(w.reflection_length() for w in members)


# ----- building ---------------------------------------------------------------


def build_certificate(
    rspec: RSpec,
    materialize_cap: int = DEFAULT_MATERIALIZE_CAP,
    shelling_facet_cap: int = DEFAULT_SHELLING_FACET_CAP,
) -> Certificate:
    """Certificate tree for I_n(R) following the recursive decomposition.

    When the degree exceeds materialize_cap the tree is built structure
    only (no element sets, no shelling searches, at any depth), which keeps
    over-cap builds cheap; verify_certificate then refuses to run on it.
    """
    memo: dict[RSpec, Certificate] = {}
    cap = materialize_cap if rspec.n <= materialize_cap else 0
    return _build(rspec, cap, shelling_facet_cap, memo)


def _materialize(rspec: RSpec, cap: int) -> frozenset[Permutation] | None:
    return _ideal_set(rspec) if rspec.n <= cap else None


def _build(rspec, cap, shell_cap, memo) -> Certificate:
    if rspec in memo:
        return memo[rspec]
    node = None
    if rspec.k == 0 and rspec.taus[0]:
        # a single cycle swallows tau_0's constraint whole
        node = _build(RSpec(rspec.n, rspec.sigma), cap, shell_cap, memo)
    elif rspec.k == 0 and rspec.m == 0:
        node = _build_leaf(rspec, cap, shell_cap)
    elif rspec.k >= 1 and rspec.m == 0:
        node = _build_product(rspec, cap, shell_cap, memo)
    elif rspec.k >= 1:
        node = _build_union_add_free(rspec, cap, shell_cap, memo)
    else:
        node = _build_union_extend_sigma(rspec, cap, shell_cap, memo)
    memo[rspec] = node
    return node


def _build_leaf(rspec, cap, shell_cap) -> Certificate:
    elements = _materialize(rspec, cap)
    shelling = None
    status = None
    if elements is not None:
        K = order_complex(_subposet(rspec.n, elements))
        if len(K.facets()) <= shell_cap:
            found = find_shelling(K, facet_cap=shell_cap)
            if found is None:
                status = "NOT_FOUND"
            else:
                shelling = tuple(found)
                status = "FOUND"
        else:
            status = "ASSUMED"
    return Certificate(
        kind=LEAF,
        n=rspec.n,
        rank=rspec.n - 1,
        rspec=rspec,
        elements=elements,
        shelling=shelling,
        shelling_status=status,
    )


def _relabel_map(block: tuple[int, ...]) -> dict[int, int]:
    return {a: i + 1 for i, a in enumerate(block)}


def _build_product(rspec, cap, shell_cap, memo) -> Certificate:
    n, k = rspec.n, rspec.k
    block0 = tuple(sorted(set(rspec.sigma) | rspec.taus[0]))
    blocks = [block0] + [tuple(sorted(t)) for t in rspec.taus[1:]]
    rel0 = _relabel_map(block0)
    factor_specs = [
        RSpec(
            len(block0),
            tuple(rel0[a] for a in rspec.sigma),
            (frozenset(rel0[a] for a in rspec.taus[0]),),
        )
    ]
    factor_specs += [RSpec(len(b), (1,)) for b in blocks[1:]]
    children = tuple(_build(s, cap, shell_cap, memo) for s in factor_specs)
    return Certificate(
        kind=PRODUCT,
        n=n,
        rank=n - k - 1,
        rspec=rspec,
        elements=_materialize(rspec, cap),
        children=children,
        blocks=tuple(blocks),
    )


def _build_union_add_free(rspec, cap, shell_cap, memo) -> Certificate:
    n, k = rspec.n, rspec.k
    j = min(rspec.free())
    child_specs = []
    for i in range(k + 1):
        taus = list(rspec.taus)
        taus[i] = taus[i] | {j}
        child_specs.append(RSpec(n, rspec.sigma, tuple(taus)))
    children = tuple(_build(s, cap, shell_cap, memo) for s in child_specs)
    inter_spec = RSpec(n, rspec.sigma, rspec.taus + (frozenset({j}),))
    inter = _build(inter_spec, cap, shell_cap, memo)
    return Certificate(
        kind=UNION,
        n=n,
        rank=n - k - 1,
        rspec=rspec,
        elements=_materialize(rspec, cap),
        children=children,
        union_mode="NARY",
        intersections=((None, inter),),
    )


def _build_union_extend_sigma(rspec, cap, shell_cap, memo) -> Certificate:
    n = rspec.n
    free = rspec.free()
    if len(free) == 1:
        # one continuation only: the union degenerates to its single term
        child = _build(RSpec(n, rspec.sigma + (free[0],)), cap, shell_cap, memo)
        if child.elements is not None and n <= cap:
            assert child.elements == _ideal_set(rspec), (
                "single-continuation ideal mismatch for %r" % (rspec,)
            )
        return child
    child_specs = [RSpec(n, rspec.sigma + (j,)) for j in free]
    children = tuple(_build(s, cap, shell_cap, memo) for s in child_specs)
    inters = []
    for subset in _subsets_of_two_or_more(len(free)):
        J = frozenset(free[a] for a in subset)
        inters.append((subset, _build_inter_union(rspec.sigma, J, n, cap, shell_cap, memo)))
    return Certificate(
        kind=UNION,
        n=n,
        rank=n - 1,
        rspec=rspec,
        elements=_materialize(rspec, cap),
        children=children,
        union_mode="NARY",
        intersections=tuple(inters),
    )


def _subsets_of_two_or_more(count: int):
    for size in range(2, count + 1):
        yield from itertools.combinations(range(count), size)


def inter_union_parts(sigma: tuple[int, ...], J: frozenset[int], n: int) -> list[RSpec]:
    """The ideals whose union is the intersection over J of the sigma+(j)
    ideals: first sigma with tau J, then each sigma+(j) with tau J\\{j}."""
    parts = [RSpec(n, sigma, (frozenset(), J))]
    for j in sorted(J):
        parts.append(RSpec(n, sigma + (j,), (frozenset(), J - {j})))
    return parts


def _build_inter_union(sigma, J, n, cap, shell_cap, memo) -> Certificate:
    parts = inter_union_parts(sigma, J, n)
    current = _build(parts[0], cap, shell_cap, memo)
    for j, spec in zip(sorted(J), parts[1:]):
        nxt = _build(spec, cap, shell_cap, memo)
        pair_inter = _build(
            RSpec(n, sigma, (frozenset(), J - {j}, frozenset({j}))),
            cap,
            shell_cap,
            memo,
        )
        elements = None
        if current.elements is not None and nxt.elements is not None:
            elements = current.elements | nxt.elements
        current = Certificate(
            kind=UNION,
            n=n,
            rank=n - 2,
            rspec=None,
            elements=elements,
            children=(current, nxt),
            union_mode="BINARY",
            intersections=(((0, 1), pair_inter),),
        )
    return current


# ----- verification -----------------------------------------------------------


@dataclass
class VerificationReport:
    verified: int = 0
    assumed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    statuses: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        return "verified=%d assumed=%d failed=%d" % (
            self.verified,
            self.assumed,
            self.failed,
        )


def verify_certificate(
    cert: Certificate,
    shelling_facet_cap: int = DEFAULT_SHELLING_FACET_CAP,
) -> VerificationReport:
    """Re-check every claim in the tree against materialized sets."""
    report = VerificationReport()
    _verify(cert, shelling_facet_cap, report)
    return report


def _record(report, node, status, message=None):
    report.statuses[id(node)] = status
    if status == "VERIFIED":
        report.verified += 1
    elif status == "ASSUMED":
        report.assumed += 1
    else:
        report.failed += 1
        if message:
            report.failures.append(message)
    return status


def _verify(node: Certificate, shell_cap: int, report: VerificationReport) -> str:
    if id(node) in report.statuses:
        return report.statuses[id(node)]
    if node.elements is None:
        raise ResourceCapError(
            "certificate for degree %d was built without materialized "
            "element sets; rebuild with a larger materialize_cap" % node.n
        )
    problems = _check_common(node)
    if problems:
        return _record(report, node, "FAILED", problems)
    checker = {
        LEAF: _check_leaf,
        PRODUCT: _check_product,
        UNION: _check_union,
    }[node.kind]
    status, message = checker(node, shell_cap, report)
    return _record(report, node, status, message)


def _check_common(node: Certificate) -> str | None:
    if not node.elements:
        return "empty ideal at %r" % (node.rspec,)
    if any(w.n != node.n for w in node.elements):
        return "degree mismatch inside %r" % (node.rspec,)
    closure = _closure(node.n, node.elements)
    if closure != node.elements:
        return "not downward closed: %r" % (node.rspec,)
    if _set_rank(node.elements) != node.rank:
        return "rank %d claimed but %d found for %r" % (
            node.rank,
            _set_rank(node.elements),
            node.rspec,
        )
    if node.rspec is not None:
        if node.rspec.n != node.n or node.rspec.k > node.n - 1:
            return "malformed rspec %r" % (node.rspec,)
        if _ideal_set(node.rspec) != node.elements:
            return "element set does not match its rspec %r" % (node.rspec,)
        if node.rank != node.rspec.n - node.rspec.k - 1:
            return "rank %d is not n-k-1 for %r" % (node.rank, node.rspec)
    return None


def _check_leaf(node, shell_cap, report):
    sub = _subposet(node.n, node.elements)
    if sub.bottom() is None or sub.top() is None:
        return "FAILED", "leaf ideal is not bounded: %r" % (node.rspec,)
    K = order_complex(sub)
    order = node.shelling
    if order is None:
        if len(K.facets()) > shell_cap:
            return "ASSUMED", None
        order = find_shelling(K, facet_cap=shell_cap)
        if order is None:
            return "FAILED", "no shelling exists for leaf %r" % (node.rspec,)
    ok, where = verify_shelling(K, list(order))
    if not ok:
        return "FAILED", "stored shelling breaks at step %s for %r" % (
            where,
            node.rspec,
        )
    return "VERIFIED", None


def _check_product(node, shell_cap, report):
    n = node.n
    covered = sorted(a for b in node.blocks for a in b)
    if covered != list(range(1, n + 1)):
        return "FAILED", "blocks do not partition 1..%d" % n
    if len(node.children) != len(node.blocks):
        return "FAILED", "factor count differs from block count"
    child_status = [_verify(c, shell_cap, report) for c in node.children]
    if "FAILED" in child_status:
        return "FAILED", "a factor certificate failed"
    maps = [_relabel_map(b) for b in node.blocks]
    factor_sets = [c.elements for c in node.children]

    def split(w: Permutation):
        parts = []
        for block, rel in zip(node.blocks, maps):
            images = [0] * len(block)
            for a in block:
                b = w(a)
                if b not in rel:
                    return None
                images[rel[a] - 1] = rel[b]
            parts.append(Permutation(images))
        return tuple(parts)

    elems = sorted(node.elements)
    parts_of = []
    for w in elems:
        parts = split(w)
        if parts is None:
            return "FAILED", "%s does not preserve the blocks" % w
        for part, fset in zip(parts, factor_sets):
            if part not in fset:
                return "FAILED", "restriction %s escapes its factor" % part
        parts_of.append(parts)
    if len(set(parts_of)) != len(parts_of):
        return "FAILED", "block restriction is not injective"
    expected = 1
    for fset in factor_sets:
        expected *= len(fset)
    if len(parts_of) != expected:
        return "FAILED", "block restriction is not onto the product"
    P, index = _degree_data(n)
    amb_idx = np.array([index[w] for w in elems])
    ambient = P.matrix()[np.ix_(amb_idx, amb_idx)]
    factorwise = np.ones_like(ambient)
    for f, block in enumerate(node.blocks):
        Pf, idxf = _degree_data(len(block))
        fi = np.array([idxf[parts[f]] for parts in parts_of])
        factorwise &= Pf.matrix()[np.ix_(fi, fi)]
    if not np.array_equal(ambient, factorwise):
        return "FAILED", "order is not preserved by the block restriction"
    if "ASSUMED" in child_status:
        return "ASSUMED", None
    return "VERIFIED", None


def _check_union(node, shell_cap, report):
    if len(node.children) < 2:
        return "FAILED", "union node needs at least two children"
    child_status = [_verify(c, shell_cap, report) for c in node.children]
    if "FAILED" in child_status:
        return "FAILED", "a child certificate failed"
    sets = [c.elements for c in node.children]
    union = frozenset().union(*sets)
    if union != node.elements:
        return "FAILED", "children do not cover the ideal exactly"
    for c in node.children:
        if c.elements == node.elements:
            return "FAILED", "a child is not a proper ideal"
        if c.rank != node.rank:
            return "FAILED", "child rank %d differs from union rank %d" % (
                c.rank,
                node.rank,
            )
    inter_status = []
    if node.union_mode == "BINARY":
        if len(node.children) != 2 or len(node.intersections) != 1:
            return "FAILED", "binary union must have two children, one intersection"
        (_, inter), = node.intersections
        inter_status.append(_verify(inter, shell_cap, report))
        if inter_status[-1] == "FAILED":
            return "FAILED", "intersection certificate failed"
        if sets[0] & sets[1] != inter.elements:
            return "FAILED", "binary intersection differs from its certificate"
        if inter.rank < node.rank - 1:
            return "FAILED", "binary intersection rank %d below %d" % (
                inter.rank,
                node.rank - 1,
            )
    elif node.union_mode == "NARY":
        by_subset = dict(node.intersections)
        subsets = list(_subsets_of_two_or_more(len(node.children)))
        if None in by_subset:
            if len(node.intersections) != 1:
                return "FAILED", "shared intersection must be the only entry"
            lookup = {s: by_subset[None] for s in subsets}
        else:
            if set(by_subset) != set(subsets):
                return "FAILED", "intersection entries do not cover all subsets"
            lookup = by_subset
        for subset in subsets:
            inter = lookup[subset]
            status = _verify(inter, shell_cap, report)
            inter_status.append(status)
            if status == "FAILED":
                return "FAILED", "intersection certificate failed"
            got = frozenset.intersection(*(sets[i] for i in subset))
            if got != inter.elements:
                return "FAILED", "intersection over %r differs from claim" % (
                    subset,
                )
            if inter.rank != node.rank - 1:
                return "FAILED", "intersection rank %d is not exactly %d" % (
                    inter.rank,
                    node.rank - 1,
                )
    else:
        return "FAILED", "unknown union mode %r" % (node.union_mode,)
    if "ASSUMED" in child_status or "ASSUMED" in inter_status:
        return "ASSUMED", None
    return "VERIFIED", None


# ----- the quoted intersection identities -------------------------------------


def _validate_inter_args(n, r, J):
    if not (1 <= r <= n - 2):
        raise PreconditionError("need 1 <= r <= n-2")
    J = frozenset(J)
    if len(J) < 2:
        raise PreconditionError("need at least two continuations in J")
    if not all(r + 1 <= j <= n for j in J):
        raise PreconditionError("J must avoid the sigma prefix 1..r")
    return J


def verify_inter1(n: int, r: int, J) -> bool:
    """Materialize both sides of: the intersection over j in J of the
    sigma+(j) ideals equals the union of I_n(sigma, tau J) and the
    I_n(sigma+(j), tau J\\{j}); sigma is (1, ..., r)."""
    J = _validate_inter_args(n, r, J)
    sigma = tuple(range(1, r + 1))
    lhs = frozenset.intersection(
        *(_ideal_set(RSpec(n, sigma + (j,))) for j in sorted(J))
    )
    rhs = frozenset().union(
        *(_ideal_set(spec) for spec in inter_union_parts(sigma, J, n))
    )
    return lhs == rhs


def verify_second_intersection(n: int, r: int, J, q: int) -> bool:
    """Materialize both sides of the peel step: I_n(sigma+(q), tau J\\{q})
    meets the union of the other parts in I_n(sigma, taus (J\\{q}, {q}));
    sigma is (1, ..., r)."""
    J = _validate_inter_args(n, r, J)
    if q not in J:
        raise PreconditionError("q must lie in J")
    sigma = tuple(range(1, r + 1))
    parts = {
        spec.sigma: spec for spec in inter_union_parts(sigma, J, n)
    }
    target = parts.pop(sigma + (q,))
    lhs = _ideal_set(target) & frozenset().union(
        *(_ideal_set(spec) for spec in parts.values())
    )
    rhs = _ideal_set(RSpec(n, sigma, (frozenset(), J - {q}, frozenset({q}))))
    return lhs == rhs


# ----- JSON export -------------------------------------------------------------


def certificate_json(cert: Certificate, statuses: dict[int, str] | None = None) -> dict:
    out = {
        "kind": cert.kind,
        "rspec": cert.rspec.to_json() if cert.rspec is not None else None,
        "rank": cert.rank,
        "size": len(cert.elements) if cert.elements is not None else None,
        "children": [certificate_json(c, statuses) for c in cert.children],
        "intersections": [
            {
                "subset": list(subset) if subset is not None else None,
                "certificate": certificate_json(inter, statuses),
            }
            for subset, inter in cert.intersections
        ],
        "status": (statuses or {}).get(id(cert), "UNVERIFIED"),
    }
    if cert.kind == UNION:
        out["mode"] = cert.union_mode
    if cert.kind == PRODUCT:
        out["blocks"] = [list(b) for b in cert.blocks]
    if cert.kind == LEAF:
        out["shelling"] = {
            "status": cert.shelling_status,
            "facets": len(cert.shelling) if cert.shelling is not None else None,
        }
    return out
