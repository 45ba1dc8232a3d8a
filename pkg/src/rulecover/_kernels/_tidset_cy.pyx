# cython: language_level=3, boundscheck=False, wraparound=False
"""Merge-based set algebra over sorted, duplicate-free uint32 id arrays.

These three loops sit under every tidset operation in the miner and the
greedy cover, which is why they are compiled.
"""

from libc.stdint cimport uint32_t

import numpy as np


def intersect(const uint32_t[::1] a, const uint32_t[::1] b):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef Py_ssize_t i = 0, j = 0, k = 0
    out_arr = np.empty(na if na < nb else nb, dtype=np.uint32)
    cdef uint32_t[::1] out = out_arr
    while i < na and j < nb:
        if a[i] < b[j]:
            i += 1
        elif a[i] > b[j]:
            j += 1
        else:
            out[k] = a[i]
            k += 1
            i += 1
            j += 1
    return out_arr[:k].copy()


def union(const uint32_t[::1] a, const uint32_t[::1] b):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef Py_ssize_t i = 0, j = 0, k = 0
    out_arr = np.empty(na + nb, dtype=np.uint32)
    cdef uint32_t[::1] out = out_arr
    while i < na and j < nb:
        if a[i] < b[j]:
            out[k] = a[i]
            i += 1
        elif a[i] > b[j]:
            out[k] = b[j]
            j += 1
        else:
            out[k] = a[i]
            i += 1
            j += 1
        k += 1
    while i < na:
        out[k] = a[i]
        i += 1
        k += 1
    while j < nb:
        out[k] = b[j]
        j += 1
        k += 1
    return out_arr[:k].copy()


def difference(const uint32_t[::1] a, const uint32_t[::1] b):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef Py_ssize_t i = 0, j = 0, k = 0
    out_arr = np.empty(na, dtype=np.uint32)
    cdef uint32_t[::1] out = out_arr
    while i < na and j < nb:
        if a[i] < b[j]:
            out[k] = a[i]
            k += 1
            i += 1
        elif a[i] > b[j]:
            j += 1
        else:
            i += 1
            j += 1
    while i < na:
        out[k] = a[i]
        i += 1
        k += 1
    return out_arr[:k].copy()
