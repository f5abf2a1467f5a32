# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels: cycle counting and pairwise order-test tables.

Mirrors absorder._kernels_py exactly; see that module for the contracts.
"""

import numpy as np

IMPLEMENTATION = "c"


def cycle_count(images) -> int:
    cdef signed char[::1] im = np.ascontiguousarray(images, dtype=np.int8)
    cdef Py_ssize_t n = im.shape[0]
    cdef Py_ssize_t start, j, count = 0
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = 1
        j = im[start]
        while j != start:
            seen[j] = 1
            j = im[j]
    return count


def quotient_cycle_count(u_inv, v) -> int:
    cdef signed char[::1] ui = np.ascontiguousarray(u_inv, dtype=np.int8)
    cdef signed char[::1] vv = np.ascontiguousarray(v, dtype=np.int8)
    cdef Py_ssize_t n = vv.shape[0]
    cdef Py_ssize_t start, j, count = 0
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = 1
        j = ui[vv[start]]
        while j != start:
            seen[j] = 1
            j = ui[vv[j]]
    return count


def leq_cross(us, vs) -> np.ndarray:
    cdef signed char[:, ::1] U = np.ascontiguousarray(us, dtype=np.int8)
    cdef signed char[:, ::1] V = np.ascontiguousarray(vs, dtype=np.int8)
    cdef Py_ssize_t A = U.shape[0]
    cdef Py_ssize_t B = V.shape[0]
    cdef Py_ssize_t n = U.shape[1]
    if V.shape[1] != n:
        raise ValueError("degree mismatch between the two lists")
    cdef signed char[:, ::1] inv = np.empty((A, n), dtype=np.int8)
    cdef int[::1] ncyc_u = np.empty(A, dtype=np.intc)
    cdef int[::1] ncyc_v = np.empty(B, dtype=np.intc)
    cdef Py_ssize_t i, j, start, x, count
    cdef int target
    cdef long stamp = 0
    cdef long[::1] seen = np.zeros(n, dtype=np.int64)
    for i in range(A):
        count = 0
        stamp += 1
        for start in range(n):
            inv[i, U[i, start]] = <signed char> start
            if seen[start] == stamp:
                continue
            count += 1
            seen[start] = stamp
            x = U[i, start]
            while x != start:
                seen[x] = stamp
                x = U[i, x]
        ncyc_u[i] = <int> count
    for j in range(B):
        count = 0
        stamp += 1
        for start in range(n):
            if seen[start] == stamp:
                continue
            count += 1
            seen[start] = stamp
            x = V[j, start]
            while x != start:
                seen[x] = stamp
                x = V[j, x]
        ncyc_v[j] = <int> count
    out_arr = np.zeros((A, B), dtype=bool)
    cdef unsigned char[:, ::1] out = out_arr.view(np.uint8)
    for i in range(A):
        for j in range(B):
            target = <int> n - ncyc_u[i] + ncyc_v[j]
            if target < 1 or target > <int> n:
                continue
            stamp += 1
            count = 0
            for start in range(n):
                if seen[start] == stamp:
                    continue
                count += 1
                seen[start] = stamp
                x = inv[i, V[j, start]]
                while x != start:
                    seen[x] = stamp
                    x = inv[i, V[j, x]]
            if count == target:
                out[i, j] = 1
    return out_arr


def leq_table(perms) -> np.ndarray:
    cdef signed char[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int8)
    cdef Py_ssize_t N = P.shape[0]
    cdef Py_ssize_t n = P.shape[1]
    cdef signed char[:, ::1] inv = np.empty((N, n), dtype=np.int8)
    cdef int[::1] ncyc = np.empty(N, dtype=np.intc)
    cdef Py_ssize_t i, j, start, x, count
    cdef int target
    cdef long stamp = 0
    cdef long[::1] seen = np.zeros(n, dtype=np.int64)
    for i in range(N):
        count = 0
        stamp += 1
        for start in range(n):
            inv[i, P[i, start]] = <signed char> start
            if seen[start] == stamp:
                continue
            count += 1
            seen[start] = stamp
            x = P[i, start]
            while x != start:
                seen[x] = stamp
                x = P[i, x]
        ncyc[i] = <int> count
    out_arr = np.zeros((N, N), dtype=bool)
    cdef unsigned char[:, ::1] out = out_arr.view(np.uint8)
    for i in range(N):
        for j in range(N):
            target = <int> n - ncyc[i] + ncyc[j]
            if target < 1 or target > <int> n:
                continue
            stamp += 1
            count = 0
            for start in range(n):
                if seen[start] == stamp:
                    continue
                count += 1
                seen[start] = stamp
                x = inv[i, P[j, start]]
                while x != start:
                    seen[x] = stamp
                    x = inv[i, P[j, x]]
            if count == target:
                out[i, j] = 1
    return out_arr
