"""Pure-Python kernels: cycle counting and pairwise order-test tables.

Same contracts as the compiled twin absorder._ckernels; absorder.kernels
picks whichever imports.  Arrays are 0-indexed images (value perm[x] is the
image of x), unlike the 1-indexed Permutation API above these kernels.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def cycle_count(images) -> int:
    """Number of cycles (fixed points included) of a 0-indexed permutation."""
    n = len(images)
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        j = images[start]
        seen[start] = 1
        while j != start:
            seen[j] = 1
            j = images[j]
    return count


def quotient_cycle_count(u_inv, v) -> int:
    """Number of cycles of x -> u_inv[v[x]] (both 0-indexed arrays)."""
    n = len(v)
    seen = bytearray(n)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        j = u_inv[v[start]]
        seen[start] = 1
        while j != start:
            seen[j] = 1
            j = u_inv[v[j]]
    return count


def leq_cross(us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Boolean table: entry (i, j) says whether us[i] is below vs[j].

    Same order test as leq_table, but across two separate lists (useful
    for rank-layer-against-rank-layer cover computations where the full
    square table would not fit).
    """
    us = np.asarray(us)
    vs = np.asarray(vs)
    A, n = us.shape
    B, n2 = vs.shape
    if n != n2:
        raise ValueError("degree mismatch between the two lists")
    ulists = [tuple(int(x) for x in row) for row in us]
    vlists = [tuple(int(x) for x in row) for row in vs]
    invs = []
    ncyc_u = []
    for row in ulists:
        inv = [0] * n
        for i, j in enumerate(row):
            inv[j] = i
        invs.append(tuple(inv))
        ncyc_u.append(cycle_count(row))
    ncyc_v = [cycle_count(row) for row in vlists]
    out = np.zeros((A, B), dtype=bool)
    seen = [0] * n
    stamp = 0
    for i in range(A):
        u_inv = invs[i]
        ci = ncyc_u[i]
        row_out = out[i]
        for j in range(B):
            v = vlists[j]
            target = n - ci + ncyc_v[j]
            if target < 1 or target > n:
                continue
            stamp += 1
            count = 0
            for start in range(n):
                if seen[start] == stamp:
                    continue
                count += 1
                seen[start] = stamp
                x = u_inv[v[start]]
                while x != start:
                    seen[x] = stamp
                    x = u_inv[v[x]]
            if count == target:
                row_out[j] = True
    return out


def leq_table(perms: np.ndarray) -> np.ndarray:
    """Boolean table of the absolute order over a list of permutations.

    ``perms`` is an (N, n) integer array of 0-indexed images.  Entry (i, j)
    of the result says whether perms[i] is below perms[j]: reflection
    lengths satisfy l(u) + l(u^-1 v) = l(v), i.e. the cycle counts satisfy
    c(u^-1 v) = n - c(u) + c(v).
    """
    perms = np.asarray(perms)
    N, n = perms.shape
    plists = [tuple(int(x) for x in row) for row in perms]
    invs = []
    ncyc = []
    for row in plists:
        inv = [0] * n
        for i, j in enumerate(row):
            inv[j] = i
        invs.append(tuple(inv))
        ncyc.append(cycle_count(row))
    out = np.zeros((N, N), dtype=bool)
    seen = [0] * n
    stamp = 0
    for i in range(N):
        u_inv = invs[i]
        ci = ncyc[i]
        row_out = out[i]
        for j in range(N):
            v = plists[j]
            target = n - ci + ncyc[j]
            if target < 1 or target > n:
                continue
            stamp += 1
            count = 0
            for start in range(n):
                if seen[start] == stamp:
                    continue
                count += 1
                seen[start] = stamp
                x = u_inv[v[start]]
                while x != start:
                    seen[x] = stamp
                    x = u_inv[v[x]]
            if count == target:
                row_out[j] = True
    return out
