"""Fallback tidset kernels built on numpy's sorted-set routines.

Same contract as the compiled module: inputs and outputs are sorted,
duplicate-free uint32 arrays.
"""

import numpy as np


def intersect(a, b):
    return np.intersect1d(a, b, assume_unique=True)


def union(a, b):
    return np.union1d(a, b)


def difference(a, b):
    return np.setdiff1d(a, b, assume_unique=True)
