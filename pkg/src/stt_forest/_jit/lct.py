"""Compiled link-cut trees, mirroring :class:`stt_forest.baselines.LinkCutForest`.

Absent aggregates are 0 in sum mode and -1 in max mode, so that combining
with them is a no-op in both.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .common import CUT, EVERT, FINDROOT, LCA, LINK, MODE_MAX, MODE_SUM, PATH, RCUT, RLINK

(L, R, PAR, REV, WL, WR, LW, RW, AGG, WLW, WRW, LWW, RWW, AGGW) = range(14)
NROWS = 14


def new_state(n: int, mode: int) -> np.ndarray:
    s = np.full((NROWS, n), -1, dtype=np.int64)
    s[REV] = 0
    if mode == MODE_SUM:
        s[WL:AGG + 1] = 0
    return s


@njit(cache=True)
def _is_root(s, x):
    p = s[PAR, x]
    return p == -1 or (s[L, p] != x and s[R, p] != x)


@njit(cache=True)
def _swap(s, a, b, x):
    t = s[a, x]
    s[a, x] = s[b, x]
    s[b, x] = t


@njit(cache=True)
def _toggle(s, x):
    _swap(s, L, R, x)
    _swap(s, WL, WR, x)
    _swap(s, LW, RW, x)
    _swap(s, WLW, WRW, x)
    _swap(s, LWW, RWW, x)
    s[REV, x] ^= 1


@njit(cache=True)
def _push(s, x):
    if s[REV, x]:
        if s[L, x] != -1:
            _toggle(s, s[L, x])
        if s[R, x] != -1:
            _toggle(s, s[R, x])
        s[REV, x] = 0


@njit(cache=True)
def _update(s, x, mode):
    if mode == MODE_SUM:
        l = s[L, x]
        r = s[R, x]
        acc = 0
        if l != -1:
            acc = s[AGG, l] + s[WL, x]
            s[LW, x] = s[LW, l]
        else:
            s[LW, x] = s[WL, x]
        if r != -1:
            acc += s[WR, x] + s[AGG, r]
            s[RW, x] = s[RW, r]
        else:
            s[RW, x] = s[WR, x]
        s[AGG, x] = acc
    elif mode == MODE_MAX:
        l = s[L, x]
        r = s[R, x]
        acc = -1
        accw = -1
        if l != -1:
            acc = s[AGG, l]
            accw = s[AGGW, l]
            if s[WL, x] > acc:
                acc = s[WL, x]
                accw = s[WLW, x]
            s[LW, x] = s[LW, l]
            s[LWW, x] = s[LWW, l]
        else:
            s[LW, x] = s[WL, x]
            s[LWW, x] = s[WLW, x]
        if r != -1:
            if s[WR, x] > acc:
                acc = s[WR, x]
                accw = s[WRW, x]
            if s[AGG, r] > acc:
                acc = s[AGG, r]
                accw = s[AGGW, r]
            s[RW, x] = s[RW, r]
            s[RWW, x] = s[RWW, r]
        else:
            s[RW, x] = s[WR, x]
            s[RWW, x] = s[WRW, x]
        s[AGG, x] = acc
        s[AGGW, x] = accw


@njit(cache=True)
def _rotate(s, cnt, x, mode):
    p = s[PAR, x]
    g = s[PAR, p]
    if not _is_root(s, p):
        if s[L, g] == p:
            s[L, g] = x
        else:
            s[R, g] = x
    s[PAR, x] = g
    if s[L, p] == x:
        b = s[R, x]
        s[L, p] = b
        s[R, x] = p
    else:
        b = s[L, x]
        s[R, p] = b
        s[L, x] = p
    if b != -1:
        s[PAR, b] = p
    s[PAR, p] = x
    _update(s, p, mode)
    _update(s, x, mode)
    cnt[0] += 1


@njit(cache=True)
def _splay(s, cnt, x, mode, rev, stack):
    if rev:
        k = 0
        y = x
        stack[k] = y
        k += 1
        while not _is_root(s, y):
            y = s[PAR, y]
            stack[k] = y
            k += 1
        for i in range(k - 1, -1, -1):
            _push(s, stack[i])
    while not _is_root(s, x):
        p = s[PAR, x]
        if not _is_root(s, p):
            g = s[PAR, p]
            if (s[L, g] == p) == (s[L, p] == x):
                _rotate(s, cnt, p, mode)
            else:
                _rotate(s, cnt, x, mode)
        _rotate(s, cnt, x, mode)


@njit(cache=True)
def access(s, cnt, v, mode, rev, stack):
    last = -1
    y = v
    while y != -1:
        _splay(s, cnt, y, mode, rev, stack)
        s[R, y] = last
        if last != -1:
            s[WR, y] = s[LW, last]
            s[WRW, y] = s[LWW, last]
        _update(s, y, mode)
        last = y
        y = s[PAR, y]
    _splay(s, cnt, v, mode, rev, stack)
    return last


@njit(cache=True)
def evert(s, cnt, v, mode, stack):
    access(s, cnt, v, mode, True, stack)
    _toggle(s, v)


@njit(cache=True)
def find_root(s, cnt, v, mode, rev, stack):
    access(s, cnt, v, mode, rev, stack)
    x = v
    while True:
        if rev:
            _push(s, x)
        if s[L, x] == -1:
            break
        x = s[L, x]
    _splay(s, cnt, x, mode, rev, stack)
    return x


@njit(cache=True)
def link(s, cnt, u, v, w, wit, mode, stack):
    evert(s, cnt, u, mode, stack)
    s[WL, u] = w
    s[WLW, u] = wit
    _update(s, u, mode)
    s[PAR, u] = v


@njit(cache=True)
def cut(s, cnt, u, v, mode, stack):
    evert(s, cnt, u, mode, stack)
    access(s, cnt, v, mode, True, stack)
    s[L, v] = -1
    s[PAR, u] = -1
    _update(s, v, mode)


@njit(cache=True)
def path_weight(s, cnt, u, v, mode, stack):
    if u == v:
        return True, (1 if mode == 0 else 0), -1
    evert(s, cnt, u, mode, stack)
    access(s, cnt, v, mode, True, stack)
    if s[PAR, u] == -1:
        return False, -1, -1
    if mode == 0:
        return True, 1, -1
    return True, s[AGG, v], s[AGGW, v]


@njit(cache=True)
def rooted_link(s, cnt, u, v, rev, stack):
    access(s, cnt, u, 0, rev, stack)
    s[PAR, u] = v


@njit(cache=True)
def rooted_cut(s, cnt, v, rev, stack):
    access(s, cnt, v, 0, rev, stack)
    l = s[L, v]
    if l != -1:
        s[L, v] = -1
        s[PAR, l] = -1


@njit(cache=True)
def lca(s, cnt, u, v, rev, stack):
    if u == v:
        return u
    if find_root(s, cnt, u, 0, rev, stack) != find_root(s, cnt, v, 0, rev, stack):
        return -1
    access(s, cnt, u, 0, rev, stack)
    return access(s, cnt, v, 0, rev, stack)


@njit(cache=True)
def run(ops, s, cnt, mode, rev, out):
    n = s.shape[1]
    stack = np.empty(n, dtype=np.int64)
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        a = ops[i, 1]
        b = ops[i, 2]
        if op == LINK:
            link(s, cnt, a, b, ops[i, 3], a * n + b, mode, stack)
        elif op == CUT:
            cut(s, cnt, a, b, mode, stack)
        elif op == PATH:
            found, w, _ = path_weight(s, cnt, a, b, mode, stack)
            out[i] = w if found else -1
        elif op == RLINK:
            rooted_link(s, cnt, a, b, rev, stack)
        elif op == RCUT:
            rooted_cut(s, cnt, a, rev, stack)
        elif op == LCA:
            out[i] = lca(s, cnt, a, b, rev, stack)
        elif op == EVERT:
            evert(s, cnt, a, 0, stack)
        elif op == FINDROOT:
            out[i] = find_root(s, cnt, a, 0, rev, stack)
