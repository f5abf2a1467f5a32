"""Abstract simplicial complexes, order complexes, and shellings.

Faces are frozensets of vertex indices.  A complex always contains the
empty face; ``SimplicialComplex({})`` (no vertices) is the complex whose
only face is empty, which is what links of facets look like.  Order
complexes enumerate their faces as chains of the source poset directly
(depth-first extension along the comparability lists) instead of expanding
subsets of facets.
"""

from __future__ import annotations

import itertools
from typing import IO, Iterable, Sequence

from .errors import PreconditionError, ResourceCapError
from .poset import Poset

DEFAULT_SHELLING_FACET_CAP = 200
DEFAULT_SHELLING_STEP_CAP = 10**6


class SimplicialComplex:
    """A finite abstract simplicial complex on vertices 0..n-1.

    ``faces_by_dim[d]`` lists the d-faces (vertex frozensets), d >= 0.  The
    empty face is implicit.  Construction checks downward closure.
    """

    def __init__(
        self,
        faces: Iterable[frozenset[int]],
        labels: Sequence | None = None,
        source_poset: Poset | None = None,
    ):
        by_dim: dict[int, set[frozenset[int]]] = {}
        for f in faces:
            f = frozenset(f)
            if f:
                by_dim.setdefault(len(f) - 1, set()).add(f)
        self.faces_by_dim: dict[int, list[frozenset[int]]] = {
            d: sorted(by_dim[d], key=sorted) for d in sorted(by_dim)
        }
        self.labels = tuple(labels) if labels is not None else None
        self.source_poset = source_poset
        self._facets: list[frozenset[int]] | None = None
        self._check_closed()

    def _check_closed(self):
        for d in sorted(self.faces_by_dim, reverse=True):
            if d == 0:
                continue
            lower = self.faces_by_dim.get(d - 1, ())
            lower_set = set(lower)
            for f in self.faces_by_dim[d]:
                for v in f:
                    if f - {v} not in lower_set:
                        raise ValueError(
                            "not closed under taking subsets: %r lacks %r"
                            % (sorted(f), sorted(f - {v}))
                        )

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Iterable[int]],
        labels: Sequence | None = None,
    ) -> "SimplicialComplex":
        faces: set[frozenset[int]] = set()
        for facet in facets:
            facet = frozenset(facet)
            for size in range(1, len(facet) + 1):
                for sub in itertools.combinations(sorted(facet), size):
                    faces.add(frozenset(sub))
        return cls(faces, labels=labels)

    # ----- basic queries --------------------------------------------------

    @property
    def dim(self) -> int:
        return max(self.faces_by_dim, default=-1)

    def faces(self, d: int) -> list[frozenset[int]]:
        return self.faces_by_dim.get(d, [])

    def all_faces(self) -> Iterable[frozenset[int]]:
        for d in sorted(self.faces_by_dim):
            yield from self.faces_by_dim[d]

    def n_faces(self, d: int) -> int:
        if d == -1:
            return 1
        return len(self.faces_by_dim.get(d, ()))

    def f_vector(self) -> list[int]:
        return [self.n_faces(d) for d in range(self.dim + 1)]

    def euler_characteristic_reduced(self) -> int:
        """Alternating face-count sum, the empty face contributing -1."""
        total = -1
        for d, fs in self.faces_by_dim.items():
            total += len(fs) if d % 2 == 0 else -len(fs)
        return total

    def facets(self) -> list[frozenset[int]]:
        """Faces not contained in a bigger face (the empty complex has none)."""
        if self._facets is None:
            dominated: set[frozenset[int]] = set()
            for d, fs in self.faces_by_dim.items():
                for f in fs:
                    for v in f:
                        dominated.add(f - {v})
            self._facets = [
                f
                for d in sorted(self.faces_by_dim)
                for f in self.faces_by_dim[d]
                if f not in dominated
            ]
        return self._facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets()}) <= 1

    def has_face(self, f: Iterable[int]) -> bool:
        f = frozenset(f)
        if not f:
            return True
        return f in set(self.faces_by_dim.get(len(f) - 1, ()))

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """link(F) = { G \\ F : G a face containing F }."""
        face = frozenset(face)
        if face and not self.has_face(face):
            raise PreconditionError("%r is not a face" % sorted(face))
        out = []
        for g in self.all_faces():
            if face <= g and g != face:
                out.append(g - face)
        return SimplicialComplex(out, labels=self.labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.faces_by_dim == other.faces_by_dim
        )


def order_complex(P: Poset) -> SimplicialComplex:
    """The complex of chains of P; vertex i is P.elements[i]."""
    return SimplicialComplex(
        (frozenset(chain) for chain in P.chains()),
        labels=P.elements,
        source_poset=P,
    )


# ----- facet-list file format ----------------------------------------------


def write_facet_file(K: SimplicialComplex, stream: IO[str]) -> None:
    """One facet per line, vertices sorted, space-separated."""
    for facet in sorted(K.facets(), key=sorted):
        stream.write(" ".join(str(v) for v in sorted(facet)) + "\n")


def read_facet_file(stream: IO[str]) -> SimplicialComplex:
    facets = []
    for line in stream:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append(frozenset(int(tok) for tok in line.split()))
    return SimplicialComplex.from_facets(facets)


# ----- shellings ------------------------------------------------------------


def verify_shelling(
    K: SimplicialComplex, order: Sequence[int]
) -> tuple[bool, int | None]:
    """Check a facet ordering for the shelling condition.

    ``order`` lists facet indices into K.facets().  Returns (True, None) or
    (False, i) for the first i whose facet meets the union of its
    predecessors in something not pure of codimension one.  The complex
    must be pure and the order must use every facet exactly once.
    """
    facets = K.facets()
    if not K.is_pure():
        raise PreconditionError("shellings are defined here for pure complexes")
    if sorted(order) != list(range(len(facets))):
        raise ValueError("order must be a permutation of all facet indices")
    d = K.dim
    if d <= 0 or len(facets) == 1:
        return True, None
    for i in range(1, len(order)):
        g = facets[order[i]]
        if not _attachment_ok(g, [facets[order[j]] for j in range(i)]):
            return False, i
    return True, None


def _attachment_ok(g: frozenset[int], earlier: list[frozenset[int]]) -> bool:
    """Whether g meets the union of ``earlier`` in a pure complex of
    dimension dim(g) - 1 (i.e. nonempty, every maximal intersection has
    exactly one vertex of g missing)."""
    inters = {g & e for e in earlier}
    inters.discard(g)
    if not any(inters):
        return False
    want = len(g) - 1
    big = [f for f in inters if len(f) == want]
    if not big:
        return False
    rest = [f for f in inters if len(f) < want]
    big_set = set(big)
    for f in rest:
        if not any(f <= b for b in big_set):
            return False
    return True


def find_shelling(
    K: SimplicialComplex,
    facet_cap: int = DEFAULT_SHELLING_FACET_CAP,
    step_cap: int = DEFAULT_SHELLING_STEP_CAP,
) -> list[int] | None:
    """Search for a shelling order; None means the search exhausted all
    orders (the complex is unshellable), greedy first with backtracking.

    Candidates at each step are tried by descending count of boundary
    (codim-1) faces already covered, which keeps the search near-greedy on
    complexes that shell easily.  Raises ResourceCapError when the facet
    count exceeds ``facet_cap`` or the search exceeds ``step_cap`` nodes.
    """
    facets = K.facets()
    if not K.is_pure():
        raise PreconditionError("shellings are defined here for pure complexes")
    if len(facets) > facet_cap:
        raise ResourceCapError(
            "%d facets exceeds the shelling search cap %d" % (len(facets), facet_cap)
        )
    m = len(facets)
    if m == 0:
        return []
    if m == 1 or K.dim <= 0:
        return list(range(m))

    boundary_cover: set[frozenset[int]] = set()
    used = [False] * m
    chosen: list[int] = []
    steps = 0

    def candidates() -> list[int]:
        scored = []
        for i in range(m):
            if used[i]:
                continue
            if chosen and not _attachment_ok(facets[i], [facets[j] for j in chosen]):
                continue
            shared = sum(
                1
                for v in facets[i]
                if (facets[i] - {v}) in boundary_cover
            )
            scored.append((-shared, i))
        scored.sort()
        return [i for _, i in scored]

    def search() -> bool:
        nonlocal steps
        if len(chosen) == m:
            return True
        for i in candidates():
            steps += 1
            if steps > step_cap:
                raise ResourceCapError(
                    "shelling search exceeded %d steps" % step_cap
                )
            added = []
            for v in facets[i]:
                sub = facets[i] - {v}
                if sub not in boundary_cover:
                    added.append(sub)
            boundary_cover.update(added)
            used[i] = True
            chosen.append(i)
            if search():
                return True
            chosen.pop()
            used[i] = False
            boundary_cover.difference_update(added)
        return False

    if search():
        return chosen
    return None
