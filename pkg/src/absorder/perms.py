"""Permutations of {1, ..., n} with cached cycle structure.

Conventions used throughout the package:

* elements are 1-indexed, so a permutation of degree n acts on {1, ..., n};
* composition is right-to-left, (u * v)(x) = u(v(x));
* cycle decompositions keep fixed points as 1-cycles, each cycle is rotated
  to start at its minimum, and cycles are sorted by that minimum — so the
  decomposition is a canonical form and ``reflection_length`` is just
  n minus the number of cycles.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

from .errors import DegreeMismatchError, PermutationParseError


class Permutation:
    """A permutation of {1, ..., n}, stored in one-line form.

    >>> w = Permutation((2, 1, 4, 3))
    >>> w(1), w(3)
    (2, 4)
    >>> str(w)
    '(1 2)(3 4)'
    >>> w.reflection_length()
    2
    """

    __slots__ = ("n", "images", "_cycles")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (n, images))
        self.n = n
        self.images = images
        self._cycles = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation of degree n from disjoint cycles; elements of
        {1, ..., n} not mentioned are fixed."""
        images = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for a in cyc:
                if not (1 <= a <= n):
                    raise ValueError("cycle entry %r out of range 1..%d" % (a, n))
                if a in seen:
                    raise ValueError("cycles are not disjoint: %d repeated" % a)
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition u * v, acting as x -> u(v(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise DegreeMismatchError(
                "cannot compose degree %d with degree %d" % (self.n, other.n)
            )
        im = self.images
        return Permutation(tuple(im[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycle decomposition, fixed points included.

        >>> Permutation((2, 1, 4, 3)).cycles()
        ((1, 2), (3, 4))
        >>> Permutation((1, 3, 2)).cycles()
        ((1,), (2, 3))
        """
        if self._cycles is None:
            im = self.images
            seen = [False] * self.n
            out = []
            for start in range(1, self.n + 1):
                if seen[start - 1]:
                    continue
                cyc = [start]
                seen[start - 1] = True
                j = im[start - 1]
                while j != start:
                    cyc.append(j)
                    seen[j - 1] = True
                    j = im[j - 1]
                out.append(tuple(cyc))
            self._cycles = tuple(out)
        return self._cycles

    def cycle_count(self) -> int:
        return len(self.cycles())

    def reflection_length(self) -> int:
        """Length in the generating set of all transpositions: n - #cycles."""
        return self.n - len(self.cycles())

    def support(self) -> frozenset[int]:
        """Elements moved by the permutation."""
        return frozenset(
            i for i, j in enumerate(self.images, start=1) if i != j
        )

    def nontrivial_cycles(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.cycles() if len(c) > 1)

    def one_line_str(self) -> str:
        return " ".join(str(i) for i in self.images)

    def cycle_str(self, include_fixed: bool = False) -> str:
        """Cycle notation; the identity prints as '()'.

        >>> Permutation((2, 1, 3)).cycle_str()
        '(1 2)'
        >>> Permutation((2, 1, 3)).cycle_str(include_fixed=True)
        '(1 2)(3)'
        """
        cycs = self.cycles() if include_fixed else self.nontrivial_cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(a) for a in c) + ")" for c in cycs)

    def __str__(self) -> str:
        return self.cycle_str()

    def __repr__(self) -> str:
        return "Permutation(%r)" % (self.images,)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        # lexicographic on one-line form; gives deterministic element orders
        return self.images < other.images


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(compose(u, v))(x) = u(v(x))."""
    return u * v


def inverse(u: Permutation) -> Permutation:
    return u.inverse()


def cycle_decomposition(u: Permutation) -> tuple[tuple[int, ...], ...]:
    return u.cycles()


def reflection_length(u: Permutation) -> int:
    return u.reflection_length()


def transposition(n: int, a: int, b: int) -> Permutation:
    if a == b:
        raise ValueError("a transposition needs two distinct points")
    return Permutation.from_cycles(n, [(a, b)])


def all_transpositions(n: int) -> list[Permutation]:
    return [
        transposition(n, a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
    ]


def sn_elements(n: int) -> list[Permutation]:
    """All of S_n in lexicographic one-line order (identity first)."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


_CYCLE_TOKEN = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation '(1 2)(3 4)' or one-line notation '2 1 4 3'.

    In cycle notation fixed points may be omitted; the degree is the largest
    element mentioned unless ``n`` says otherwise.  '()' is the identity
    (degree taken from ``n``, default 1).

    >>> parse_permutation("(1 2)(3 4)").images
    (2, 1, 4, 3)
    >>> parse_permutation("2 1 4 3")
    Permutation((2, 1, 4, 3))
    >>> parse_permutation("(2 4)", n=5).cycle_str()
    '(2 4)'
    """
    text = text.strip()
    if not text:
        raise PermutationParseError("empty permutation string")
    if text.startswith("("):
        cycles = []
        pos = 0
        for m in _CYCLE_TOKEN.finditer(text):
            if text[pos : m.start()].strip():
                raise PermutationParseError(
                    "unexpected text %r in %r" % (text[pos : m.start()], text)
                )
            body = m.group(1).replace(",", " ").split()
            try:
                entries = [int(tok) for tok in body]
            except ValueError:
                raise PermutationParseError("bad cycle entry in %r" % text) from None
            if entries:
                cycles.append(entries)
            pos = m.end()
        if text[pos:].strip():
            raise PermutationParseError(
                "unexpected trailing text %r in %r" % (text[pos:], text)
            )
        top = max((max(c) for c in cycles), default=1)
        if any(min(c) < 1 for c in cycles):
            raise PermutationParseError("cycle entries must be >= 1 in %r" % text)
        degree = top if n is None else n
        if degree < top:
            raise PermutationParseError(
                "degree %d too small for element %d in %r" % (degree, top, text)
            )
        try:
            return Permutation.from_cycles(degree, cycles)
        except ValueError as exc:
            raise PermutationParseError(str(exc)) from None
    body = text.replace(",", " ").split()
    try:
        images = [int(tok) for tok in body]
    except ValueError:
        raise PermutationParseError("bad one-line entry in %r" % text) from None
    if n is not None and n != len(images):
        raise PermutationParseError(
            "one-line form %r has length %d, expected degree %d"
            % (text, len(images), n)
        )
    try:
        return Permutation(images)
    except ValueError as exc:
        raise PermutationParseError(str(exc)) from None
