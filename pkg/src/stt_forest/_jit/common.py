"""Opcodes, weight modes and the result checksum shared by all kernels."""

from __future__ import annotations

import numpy as np
from numba import njit

LINK, CUT, PATH, RLINK, RCUT, LCA, EVERT, FINDROOT = 0, 1, 2, 3, 4, 5, 6, 7
QUERY_OPS = (PATH, LCA, FINDROOT)

MODE_UNIT, MODE_SUM, MODE_MAX, MODE_ROOTED = 0, 1, 2, 3

FNV_OFFSET = 1469598103934665603
FNV_PRIME = 1099511628211


@njit(cache=True)
def checksum(ops, out):
    """FNV-1a over the little-endian bytes of every query result."""
    h = np.uint64(FNV_OFFSET)
    prime = np.uint64(FNV_PRIME)
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        if op == PATH or op == LCA or op == FINDROOT:
            x = np.uint64(out[i])
            for _ in range(8):
                h ^= x & np.uint64(0xFF)
                h *= prime
                x >>= np.uint64(8)
    return h
