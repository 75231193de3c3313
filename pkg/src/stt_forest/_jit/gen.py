"""Compiled workload generators; each keeps a shadow forest so scripts are legal."""

from __future__ import annotations

import numpy as np
from numba import njit

from .common import CUT, EVERT, FINDROOT, LCA, LINK, PATH, RCUT, RLINK
from .rng import normal, randbelow, random

MAX_RANDOM_WEIGHT = 1 << 20


@njit(cache=True)
def _root(parent, v):
    while parent[v] != -1:
        v = parent[v]
    return v


@njit(cache=True)
def _evert(parent, v):
    prev = -1
    x = v
    while x != -1:
        nx = parent[x]
        parent[x] = prev
        prev = x
        x = nx


@njit(cache=True)
def gen_urc(n, m, p_path, state):
    """Uniform pairs: link if disconnected, else query or cut a path edge."""
    ops = np.zeros((m, 4), dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    for i in range(m):
        u = randbelow(state, n)
        v = randbelow(state, n - 1)
        if v >= u:
            v += 1
        if _root(parent, u) != _root(parent, v):
            w = 1 + randbelow(state, MAX_RANDOM_WEIGHT)
            _evert(parent, u)
            parent[u] = v
            ops[i, 0] = LINK
            ops[i, 1] = u
            ops[i, 2] = v
            ops[i, 3] = w
        elif random(state) < p_path:
            ops[i, 0] = PATH
            ops[i, 1] = u
            ops[i, 2] = v
        else:
            _evert(parent, u)
            length = 0
            x = v
            while x != u:
                x = parent[x]
                length += 1
            k = randbelow(state, length)
            x = v
            for _ in range(k):
                x = parent[x]
            ops[i, 0] = CUT
            ops[i, 1] = x
            ops[i, 2] = parent[x]
            parent[x] = -1
    return ops


@njit(cache=True)
def gen_degenerate(n, sigma, state):
    """Build the path 0-1-...-(n-1), then query (j, n-1) with j near i."""
    ops = np.zeros((2 * n - 1, 4), dtype=np.int64)
    for i in range(n - 1):
        ops[i, 0] = LINK
        ops[i, 1] = i
        ops[i, 2] = i + 1
        ops[i, 3] = 1
    for i in range(n):
        j = i
        if sigma > 0.0:
            j = i + np.int64(np.floor(sigma * normal(state)))
            j = min(max(j, 0), n - 1)
        row = n - 1 + i
        ops[row, 0] = PATH
        ops[row, 1] = j
        ops[row, 2] = n - 1
    return ops


@njit(cache=True)
def gen_lca(n, m, with_evert, p_find_root, state):
    """Rooted mix of links, cuts, LCAs (and everts / find-roots)."""
    ops = np.zeros((m, 4), dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    # non-root nodes, kept as an array with positions for O(1) removal
    members = np.empty(n, dtype=np.int64)
    pos = np.full(n, -1, dtype=np.int64)
    k = 0
    for i in range(m):
        if p_find_root > 0.0 and random(state) < p_find_root:
            ops[i, 0] = FINDROOT
            ops[i, 1] = randbelow(state, n)
            continue
        if random(state) < 0.5 * k / (n - 1):
            if with_evert and random(state) < 0.5:
                v = randbelow(state, n)
                r = _root(parent, v)
                if r != v:
                    _evert(parent, v)
                    # v leaves the non-root set, the old root joins it
                    members[pos[v]] = r
                    pos[r] = pos[v]
                    pos[v] = -1
                ops[i, 0] = EVERT
                ops[i, 1] = v
            else:
                v = members[randbelow(state, k)]
                parent[v] = -1
                k -= 1
                last = members[k]
                members[pos[v]] = last
                pos[last] = pos[v]
                pos[v] = -1
                ops[i, 0] = RCUT
                ops[i, 1] = v
            continue
        u = randbelow(state, n)
        v = randbelow(state, n - 1)
        if v >= u:
            v += 1
        ru = _root(parent, u)
        if ru != _root(parent, v):
            parent[ru] = v
            members[k] = ru
            pos[ru] = k
            k += 1
            ops[i, 0] = RLINK
            ops[i, 1] = ru
            ops[i, 2] = v
        else:
            ops[i, 0] = LCA
            ops[i, 1] = u
            ops[i, 2] = v
    return ops
