"""Mobius function of the absolute order and the Euler characteristic table.

Bound the absolute order by one artificial maximum; its proper part (strip
the minimum and that maximum) is S_n minus the identity.  Three independent
routes to chi~ of the order complex of that proper part:

* mobius_product: mu(identity, x) is multiplicative over cycles of x, the
  factor for an l-cycle being (-1)^(l-1) Catalan(l-1); mu of the bounded
  extension's top is minus the sum over all x, which equals chi~.
* mobius_direct: the defining recursion mu(x) = -sum_{y < x} mu(y) over
  any poset with a minimum, needing only a leq oracle.
* gf_expand: coefficients of 1 - C(t) exp(-2 t C(t)) where C is the
  Catalan generating function; n! times the t^n coefficient is the signed
  value (-1)^n chi~ tabulated by the CLI.

The table starts 1, 0, 2, 16, 192, 3008 (n = 1..6).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .perms import Permutation
from .poset import Poset
from .series import Series, catalan, catalan_series, series_exp


def mobius_product(x: Permutation) -> int:
    """mu(identity, x) in the absolute order, by the cycle-type product."""
    out = 1
    for c in x.cycles():
        l = len(c)
        factor = catalan(l - 1)
        out *= factor if (l - 1) % 2 == 0 else -factor
    return out


def mobius_direct(P: Poset, x: int) -> int:
    """mu(bottom, x) by the defining recursion; x is an element index.

    P must have a unique minimum.  Only leq queries are issued, so this
    works on posets too big for a materialized matrix.
    """
    n = len(P.elements)
    bottom = None
    if P.ranks is not None:
        zeros = [i for i, r in enumerate(P.ranks) if r == min(P.ranks)]
        if len(zeros) == 1:
            bottom = zeros[0]
    if bottom is None:
        bottom = P.bottom()
    if bottom is None:
        raise ValueError("mobius_direct needs a poset with a unique minimum")
    below = [i for i in range(n) if P.leq(i, x)]
    if bottom not in below:
        raise ValueError("element %d is not above the minimum" % x)
    order = sorted(below, key=_linext_key(P, below))
    mu: dict[int, int] = {}
    for i in order:
        if i == bottom:
            mu[i] = 1
            continue
        acc = 0
        for j in order:
            if j != i and P.leq(j, i):
                acc += mu[j]
        mu[i] = -acc
    return mu[x]


def _linext_key(P: Poset, members: Sequence[int]):
    if P.ranks is not None:
        ranks = P.ranks
        return lambda i: (ranks[i], i)
    downsize = {i: sum(1 for j in members if P.leq(j, i)) for i in members}
    return lambda i: (downsize[i], i)


def euler_char_proper_part(n: int, method: str = "partitions") -> int:
    """chi~ of the order complex of (absolute order on S_n) minus the
    identity, as minus the mu-sum over all of S_n.

    ``method="partitions"`` groups the sum by cycle type with exact
    conjugacy-class sizes; ``method="permutations"`` adds mu over every
    permutation one by one (the oracle; factorial time).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if method == "permutations":
        total = 0
        for w in itertools.permutations(range(1, n + 1)):
            total += mobius_product(Permutation(w))
        return -total
    if method != "partitions":
        raise ValueError("unknown method %r" % method)
    total = 0
    for lam in _partitions(n):
        size = _conjugacy_class_size(n, lam)
        mu = 1
        for part in lam:
            factor = catalan(part - 1)
            mu *= factor if (part - 1) % 2 == 0 else -factor
        total += size * mu
    return -total


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    cap = n if cap is None else cap
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _conjugacy_class_size(n: int, lam: Sequence[int]) -> int:
    denom = 1
    for part in lam:
        denom *= part
    for mult in _multiplicities(lam).values():
        for t in range(2, mult + 1):
            denom *= t
    out, rem = divmod(_factorial(n), denom)
    assert rem == 0
    return out


def _multiplicities(lam: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def _factorial(n: int) -> int:
    out = 1
    for t in range(2, n + 1):
        out *= t
    return out


def table1_value(n: int, method: str = "mobius") -> int:
    """The signed Euler characteristic (-1)^n chi~ for degree n."""
    if method == "gf":
        return gf_expand(n)[n - 1]
    chi = euler_char_proper_part(n)
    return chi if n % 2 == 0 else -chi


def gf_expand(top: int) -> list[int]:
    """Signed Euler characteristics for n = 1..top out of the generating
    function 1 - C(t) exp(-2 t C(t)); entries must come out as integers
    after multiplying by n!."""
    if top < 1:
        raise ValueError("need top >= 1")
    C = catalan_series(top)
    inner = (C * Fraction(-2)).shift(1)
    F = 1 - C * series_exp(inner)
    out = []
    fact = 1
    for n in range(1, top + 1):
        fact *= n
        value = F[n] * fact
        if value.denominator != 1:
            raise AssertionError(
                "coefficient %d of the generating function is not integral" % n
            )
        out.append(int(value))
    return out
