"""Reduced simplicial homology over the integers, by Smith normal form.

Boundary matrices are kept sparse (dict-of-dicts) and all arithmetic is on
Python integers, so intermediate entry growth is harmless.  Elimination
prefers +-1 pivots with a low fill score; pivots of larger absolute value
go through the usual remainder dance.  The chain complex is reduced: the
empty face spans C_{-1} and the augmentation map is the boundary of every
vertex, so the homology of the complex {} (only the empty face) comes out
as a single Z in dimension -1.

Cohen-Macaulayness over Z asks every link (the empty face included) to have
vanishing reduced homology below its own dimension.  For order complexes
the link of a chain is the join of the order complexes of the open segments
the chain cuts the poset into, so links with equal segment sets share one
homology computation; the face-scan route stays available as the oracle.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .complexes import SimplicialComplex
from .poset import Poset

SparseCols = dict[int, dict[int, int]]


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group Z^free_rank + sum Z/t."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " (+) ".join(parts) if parts else "0"


# ----- sparse Smith normal form ---------------------------------------------


def smith_diagonal(cols_in: SparseCols) -> list[int]:
    """Diagonal entries of an integer matrix under unimodular row/column
    operations (not divisibility-sorted; see invariant_factors)."""
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, dict[int, int]] = {}
    for c, col in cols_in.items():
        for r, v in col.items():
            if v:
                cols.setdefault(c, {})[r] = v
                rows.setdefault(r, {})[c] = v

    def row_addmul(rt: int, rs: int, q: int) -> None:
        if not q:
            return
        row_t = rows.setdefault(rt, {})
        for c, v in list(rows.get(rs, {}).items()):
            nv = row_t.get(c, 0) + q * v
            if nv:
                row_t[c] = nv
                cols[c][rt] = nv
            else:
                row_t.pop(c, None)
                col = cols.get(c)
                if col is not None:
                    col.pop(rt, None)
                    if not col:
                        del cols[c]
        if not row_t:
            rows.pop(rt, None)

    def col_addmul(ct: int, cs: int, q: int) -> None:
        if not q:
            return
        col_t = cols.setdefault(ct, {})
        for r, v in list(cols.get(cs, {}).items()):
            nv = col_t.get(r, 0) + q * v
            if nv:
                col_t[r] = nv
                rows[r][ct] = nv
            else:
                col_t.pop(r, None)
                row = rows.get(r)
                if row is not None:
                    row.pop(ct, None)
                    if not row:
                        del rows[r]
        if not col_t:
            cols.pop(ct, None)

    def pick_pivot() -> tuple[int, int]:
        best = None
        best_abs = None
        scanned = 0
        for r, row in rows.items():
            for c, v in row.items():
                a = abs(v)
                if a == 1:
                    score = (len(row) - 1) * (len(cols[c]) - 1)
                    if best is None or not best[0] or score < best[1]:
                        best = (True, score, r, c)
                    if score == 0:
                        return r, c
                elif best is None or (not best[0] and a < best_abs):
                    best = (False, 0, r, c)
                    best_abs = a
            scanned += 1
            if scanned >= 48 and best is not None and best[0]:
                break
        return best[2], best[3]

    diag: list[int] = []
    while rows:
        r0, c0 = pick_pivot()
        while True:
            a = rows[r0][c0]
            moved = False
            for r, v in list(cols[c0].items()):
                if r == r0 or v % a == 0:
                    continue
                row_addmul(r, r0, -(v // a))
                r0 = r  # remainder is smaller than |a|; make it the pivot
                moved = True
                break
            if moved:
                continue
            for r, v in list(cols[c0].items()):
                if r != r0:
                    row_addmul(r, r0, -(v // a))
            for c, v in list(rows[r0].items()):
                if c == c0 or v % a == 0:
                    continue
                col_addmul(c, c0, -(v // a))
                c0 = c
                moved = True
                break
            if moved:
                continue
            for c, v in list(rows[r0].items()):
                if c != c0:
                    col_addmul(c, c0, -(v // a))
            break
        diag.append(rows[r0][c0])
        del rows[r0]
        del cols[c0]
    return diag


def invariant_factors(diag: Iterable[int]) -> list[int]:
    """Sort a unimodular-equivalent diagonal into the divisibility chain."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        if changed:
            d.sort()
    return d


# ----- boundary matrices and homology ---------------------------------------


def boundary_matrix(K: SimplicialComplex, d: int) -> SparseCols:
    """The boundary C_d -> C_{d-1} of the reduced chain complex; column c
    is indexed like K.faces(d), rows like K.faces(d-1) (row 0 is the empty
    face when d == 0)."""
    if d == 0:
        return {c: {0: 1} for c in range(K.n_faces(0))}
    row_index = {f: i for i, f in enumerate(K.faces(d - 1))}
    cols: SparseCols = {}
    for c, f in enumerate(K.faces(d)):
        verts = sorted(f)
        col = {}
        for t, v in enumerate(verts):
            col[row_index[f - {v}]] = 1 if t % 2 == 0 else -1
        cols[c] = col
    return cols


def _check_complex_property(lower: SparseCols, upper: SparseCols) -> None:
    """Assert lower o upper = 0 (the composite of consecutive boundaries)."""
    for c, col in upper.items():
        acc: dict[int, int] = {}
        for r, v in col.items():
            for rr, w in lower.get(r, {}).items():
                acc[rr] = acc.get(rr, 0) + v * w
        assert all(x == 0 for x in acc.values()), (
            "boundary of boundary is nonzero in column %d" % c
        )


def reduced_homology(K: SimplicialComplex) -> list[HomologyGroup]:
    """Reduced integral homology in dimensions -1 .. dim K (list offset by
    one: entry [i + 1] is dimension i)."""
    top = K.dim
    boundaries = {d: boundary_matrix(K, d) for d in range(0, top + 1)}
    for d in range(1, top + 1):
        _check_complex_property(boundaries[d - 1], boundaries[d])
    rank_of: dict[int, int] = {}
    torsion_of: dict[int, list[int]] = {}
    for d in range(0, top + 1):
        diag = smith_diagonal(boundaries[d])
        rank_of[d] = len(diag)
        torsion_of[d] = [t for t in invariant_factors(diag) if t > 1]
    out = []
    for i in range(-1, top + 1):
        n_i = K.n_faces(i)
        r_i = rank_of.get(i, 0)
        r_up = rank_of.get(i + 1, 0)
        free = n_i - r_i - r_up
        assert free >= 0
        out.append(HomologyGroup(free, tuple(torsion_of.get(i + 1, ()))))
    fvec = sum(
        (-1 if d % 2 else 1) * K.n_faces(d) for d in range(-1, top + 1)
    )
    hsum = sum(
        (-1 if i % 2 else 1) * out[i + 1].free_rank for i in range(-1, top + 1)
    )
    assert fvec == hsum, "homology contradicts the Euler characteristic"
    return out


def homology_report_json(groups: Sequence[HomologyGroup]) -> dict:
    return {
        "dims": [
            {"i": i - 1, "rank": g.free_rank, "torsion": list(g.torsion)}
            for i, g in enumerate(groups)
        ]
    }


# ----- Cohen-Macaulayness over Z ---------------------------------------------


@dataclass(frozen=True)
class CMResult:
    ok: bool
    witness_face: tuple | None = None
    witness_dim: int | None = None
    witness_group: HomologyGroup | None = None

    def __bool__(self) -> bool:
        return self.ok


def _chains_within(P: Poset, members: frozenset[int]) -> list[frozenset[int]]:
    """Nonempty chains of the induced subposet on ``members``."""
    ups = P.up_lists()
    inside = sorted(members)
    out: list[frozenset[int]] = []

    def extend(chain: list[int]) -> None:
        out.append(frozenset(chain))
        for j in ups[chain[-1]]:
            if j in members:
                chain.append(j)
                extend(chain)
                chain.pop()

    for i in inside:
        extend([i])
    return out


def _segments_of_chain(P: Poset, face: frozenset[int]) -> list[frozenset[int]]:
    """The open segments a chain cuts P into (nonempty ones only)."""
    m = P.matrix()
    n = len(P.elements)
    if not face:
        return [frozenset(range(n))] if n else []
    chain = sorted(face, key=lambda i: sum(m[:, i]))
    segs = []
    below = m[:, chain[0]].copy()
    below[chain[0]] = False
    segs.append(below)
    for x, y in zip(chain, chain[1:]):
        between = m[x, :] & m[:, y]
        between[x] = False
        between[y] = False
        segs.append(between)
    above = m[chain[-1], :].copy()
    above[chain[-1]] = False
    segs.append(above)
    out = []
    for mask in segs:
        idx = frozenset(int(i) for i in mask.nonzero()[0])
        if idx:
            out.append(idx)
    return out


def _join_of_segments(P: Poset, segments: Iterable[frozenset[int]]) -> SimplicialComplex:
    """The join of the order complexes of the given subposets of P."""
    per_segment = []
    for seg in segments:
        per_segment.append([frozenset()] + _chains_within(P, seg))
    faces = []
    for combo in itertools.product(*per_segment):
        face = frozenset().union(*combo) if combo else frozenset()
        if face:
            faces.append(face)
    return SimplicialComplex(faces)


def _link_homology_worker(args):
    key, face_lists = args
    K = SimplicialComplex(face_lists)
    return key, reduced_homology(K), K.dim


def is_cohen_macaulay_Z(
    K: SimplicialComplex, method: str = "auto", jobs: int = 1
) -> CMResult:
    """Whether every link of K (empty face included) has zero reduced
    homology below its dimension.

    ``method="direct"`` extracts links by scanning the face list (the
    oracle); the default uses the segment-join route when K is an order
    complex.  Faces are visited small-to-large, so the witness of a failure
    is the first one in (dimension, vertex order).
    """
    use_fast = method in ("auto", "intervals") and K.source_poset is not None
    if method == "intervals" and K.source_poset is None:
        raise ValueError("interval method needs an order complex")
    all_faces = [frozenset()] + [
        f for d in range(0, K.dim + 1) for f in K.faces(d)
    ]
    if not use_fast:
        for face in all_faces:
            link = K.link(face) if face else K
            groups = reduced_homology(link)
            bad = _first_violation(groups, link.dim)
            if bad is not None:
                return _failure(K, face, bad, groups)
        return CMResult(True)

    P = K.source_poset
    keys = {}
    for face in all_faces:
        keys[face] = frozenset(_segments_of_chain(P, face))
    distinct = sorted(set(keys.values()), key=lambda k: sorted(map(sorted, k)))
    results: dict[frozenset, tuple[list[HomologyGroup], int]] = {}
    if jobs > 1 and len(distinct) > 1:
        payload = []
        for key in distinct:
            komplex = _join_of_segments(P, key)
            payload.append((key, [tuple(f) for f in komplex.all_faces()]))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, groups, dim in pool.map(_link_homology_worker, payload):
                results[key] = (groups, dim)
    else:
        for key in distinct:
            komplex = _join_of_segments(P, key)
            results[key] = (reduced_homology(komplex), komplex.dim)
    for face in all_faces:
        groups, dim = results[keys[face]]
        bad = _first_violation(groups, dim)
        if bad is not None:
            return _failure(K, face, bad, groups)
    return CMResult(True)


def _first_violation(groups: list[HomologyGroup], dim: int) -> int | None:
    for i in range(-1, dim):
        if not groups[i + 1].is_zero:
            return i
    return None


def _failure(K, face, bad_dim, groups) -> CMResult:
    if K.labels is not None:
        shown = tuple(K.labels[v] for v in sorted(face))
    else:
        shown = tuple(sorted(face))
    return CMResult(False, shown, bad_dim, groups[bad_dim + 1])
