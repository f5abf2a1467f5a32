"""Cyclic sequences: deletion-subcycles and noncrossing pairs.

A cycle here is a sequence of distinct points up to rotation.  Cycle ``a``
is a deletion-subcycle of ``c`` when deleting points of ``c`` (keeping the
cyclic order of what remains) can produce ``a``.  Two disjoint
deletion-subcycles a, b of c cross when some 4-cycle (i j k l), itself a
deletion-subcycle of c, alternates between them (i, k from a and j, l from
b); geometrically, their point sets interleave on the circle drawn by c.

The fast tests below work with positions along c: ``a`` is a
deletion-subcycle iff its points, read in a's cyclic order, wrap around c at
most once; a and b are noncrossing iff their position sets occupy at most
two maximal arcs (one of each label) of the combined circular sequence.
The literal alternating-4-cycle search is kept in the test suite as the
oracle for both.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError


class Cycle:
    """A cyclic sequence of distinct points, canonically rotated.

    >>> Cycle((5, 9, 2)) == Cycle((2, 5, 9))
    True
    >>> Cycle((5, 9, 2)) == Cycle((2, 9, 5))
    False
    >>> Cycle((5, 9, 2)).points
    (2, 5, 9)
    """

    __slots__ = ("points",)

    def __init__(self, points: Sequence[int]):
        points = tuple(points)
        if not points:
            raise ValueError("a cycle needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError("cycle points must be distinct: %r" % (points,))
        shift = points.index(min(points))
        self.points = points[shift:] + points[:shift]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cycle) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return "Cycle(%r)" % (self.points,)

    def __str__(self) -> str:
        return "(" + " ".join(str(a) for a in self.points) + ")"


def _positions(a: Cycle | Sequence[int], c: Cycle) -> list[int] | None:
    """Positions of a's points along c, in a's cyclic order; None if some
    point of a is missing from c."""
    where = {p: i for i, p in enumerate(c.points)}
    out = []
    for p in a:
        if p not in where:
            return None
        out.append(where[p])
    return out


def is_deletion_subcycle(a: Cycle | Sequence[int], c: Cycle | Sequence[int]) -> bool:
    """Whether cycle a can be obtained from cycle c by deleting points.

    >>> is_deletion_subcycle((3, 6, 4), (3, 5, 1, 9, 2, 6, 4))
    True
    >>> is_deletion_subcycle((3, 4, 6), (3, 5, 1, 9, 2, 6, 4))
    False
    """
    a = a if isinstance(a, Cycle) else Cycle(a)
    c = c if isinstance(c, Cycle) else Cycle(c)
    pos = _positions(a, c)
    if pos is None:
        return False
    # a is a cyclic subsequence of c iff walking a's points wraps around the
    # circle of c at most once
    wraps = sum(1 for p, q in zip(pos, pos[1:] + pos[:1]) if q < p)
    return wraps <= 1


def _arc_run_count(pos_a: list[int], pos_b: list[int]) -> int:
    """Number of maximal same-label runs in the circular merge of the two
    position sets (positions must be disjoint)."""
    merged = sorted([(p, 0) for p in pos_a] + [(p, 1) for p in pos_b])
    labels = [lab for _, lab in merged]
    runs = sum(1 for x, y in zip(labels, labels[1:] + labels[:1]) if x != y)
    # `runs` counts label changes around the circle, which equals the number
    # of maximal runs (0 when only one label is present)
    return runs if runs else 1


def are_noncrossing(
    a: Cycle | Sequence[int],
    b: Cycle | Sequence[int],
    c: Cycle | Sequence[int],
) -> bool:
    """Whether disjoint deletion-subcycles a, b of c are noncrossing in c.

    Raises PreconditionError when a and b share points or either is not a
    deletion-subcycle of c, so a precondition failure cannot be confused
    with a crossing pair.

    >>> c = (3, 5, 1, 9, 2, 6, 4)
    >>> are_noncrossing((3, 6, 4), (5, 9, 2), c)
    True
    >>> are_noncrossing((3, 2, 4), (5, 9, 6), c)
    False
    """
    a = a if isinstance(a, Cycle) else Cycle(a)
    b = b if isinstance(b, Cycle) else Cycle(b)
    c = c if isinstance(c, Cycle) else Cycle(c)
    if set(a.points) & set(b.points):
        raise PreconditionError("cycles %s and %s are not disjoint" % (a, b))
    if not is_deletion_subcycle(a, c):
        raise PreconditionError("%s is not a deletion-subcycle of %s" % (a, c))
    if not is_deletion_subcycle(b, c):
        raise PreconditionError("%s is not a deletion-subcycle of %s" % (b, c))
    pos_a = _positions(a, c)
    pos_b = _positions(b, c)
    return _arc_run_count(pos_a, pos_b) <= 2


def crossing_witness(
    a: Cycle | Sequence[int],
    b: Cycle | Sequence[int],
    c: Cycle | Sequence[int],
) -> tuple[int, int, int, int] | None:
    """A 4-cycle (i, j, k, l) witnessing that a and b cross in c, or None.

    The witness is a deletion-subcycle of c with i, k in a and j, l in b.
    Preconditions as in are_noncrossing.
    """
    a = a if isinstance(a, Cycle) else Cycle(a)
    b = b if isinstance(b, Cycle) else Cycle(b)
    c = c if isinstance(c, Cycle) else Cycle(c)
    if are_noncrossing(a, b, c):
        return None
    set_a = set(a.points)
    merged = sorted(_positions(a, c) + _positions(b, c))
    labels = [c.points[p] in set_a for p in merged]
    # rotate the merged circle to start at an a-point whose predecessor is a
    # b-point, then pick the first point of four alternating runs
    start = next(
        i for i in range(len(merged)) if labels[i] and not labels[i - 1]
    )
    order = [(merged[(start + t) % len(merged)], labels[(start + t) % len(merged)])
             for t in range(len(merged))]
    picks = []
    want = True
    for p, lab in order:
        if lab == want:
            picks.append(p)
            want = not want
            if len(picks) == 4:
                break
    i, j, k, l = (c.points[p] for p in picks)
    return (i, j, k, l)
