"""Compiled 1-cut rootings, the adjacency-list oracle and explicit rooted forests."""

from __future__ import annotations

import numpy as np
from numba import njit

from .common import CUT, EVERT, FINDROOT, LCA, LINK, MODE_MAX, MODE_SUM, PATH, RCUT, RLINK

# ---------------------------------------------------------------------------
# 1-cut: rows parent, weight to parent, witness


@njit(cache=True)
def onecut_to_root(s, cnt, v):
    prev = -1
    pw = -1
    pwit = -1
    x = v
    while x != -1:
        nxt = s[0, x]
        nw = s[1, x]
        nwit = s[2, x]
        s[0, x] = prev
        s[1, x] = pw
        s[2, x] = pwit
        prev = x
        pw = nw
        pwit = nwit
        x = nxt
        if x != -1:
            cnt[0] += 1


@njit(cache=True)
def onecut_path(s, cnt, u, v, mode):
    if u == v:
        return True, (1 if mode == 0 else 0), -1
    onecut_to_root(s, cnt, u)
    onecut_to_root(s, cnt, v)
    acc = -1
    accw = -1
    first = True
    x = u
    while x != v:
        if s[0, x] == -1:
            return False, -1, -1
        w = s[1, x]
        if first:
            acc = w
            accw = s[2, x]
            first = False
        elif mode == MODE_SUM:
            acc += w
        elif mode == MODE_MAX and w > acc:
            acc = w
            accw = s[2, x]
        x = s[0, x]
    if mode == 0:
        return True, 1, -1
    return True, acc, accw


@njit(cache=True)
def run_onecut(ops, s, cnt, mode, out):
    n = s.shape[1]
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        a = ops[i, 1]
        b = ops[i, 2]
        if op == LINK:
            onecut_to_root(s, cnt, a)
            onecut_to_root(s, cnt, b)
            s[0, a] = b
            s[1, a] = ops[i, 3]
            s[2, a] = a * n + b
        elif op == CUT:
            onecut_to_root(s, cnt, a)
            onecut_to_root(s, cnt, b)
            s[0, a] = -1
            s[1, a] = -1
            s[2, a] = -1
        elif op == PATH:
            found, w, _ = onecut_path(s, cnt, a, b, mode)
            out[i] = w if found else -1


# ---------------------------------------------------------------------------
# adjacency-list oracle over an edge pool


class OracleState:
    """Arrays of the pooled adjacency lists; plain container, not compiled."""

    def __init__(self, n: int, capacity: int):
        cap = 2 * max(capacity, 1)
        self.head = np.full(n, -1, dtype=np.int64)
        self.nxt = np.full(cap, -1, dtype=np.int64)
        self.to = np.full(cap, -1, dtype=np.int64)
        self.wt = np.zeros(cap, dtype=np.int64)
        self.wit = np.full(cap, -1, dtype=np.int64)
        # free list threaded through nxt; slot 0 is the first free one
        self.nxt[:-1] = np.arange(1, cap)
        self.free = np.zeros(1, dtype=np.int64)
        self.prev = np.full(n, -1, dtype=np.int64)
        self.pslot = np.full(n, -1, dtype=np.int64)
        self.stamp = np.zeros(n, dtype=np.int64)
        self.queue = np.empty(n, dtype=np.int64)


@njit(cache=True)
def _add_half(head, nxt, to, wt, wit, free, a, b, w, e):
    slot = free[0]
    free[0] = nxt[slot]
    to[slot] = b
    wt[slot] = w
    wit[slot] = e
    nxt[slot] = head[a]
    head[a] = slot


@njit(cache=True)
def _remove_half(head, nxt, to, free, a, b):
    prev = -1
    slot = head[a]
    while slot != -1 and to[slot] != b:
        prev = slot
        slot = nxt[slot]
    if slot == -1:
        return False
    if prev == -1:
        head[a] = nxt[slot]
    else:
        nxt[prev] = nxt[slot]
    nxt[slot] = free[0]
    free[0] = slot
    return True


@njit(cache=True)
def oracle_path(head, nxt, to, wt, wit, prev, pslot, stamp, queue, tick, u, v, mode):
    if u == v:
        return True, (1 if mode == 0 else 0), -1
    stamp[u] = tick
    qh = 0
    qt = 0
    queue[qt] = u
    qt += 1
    found = False
    while qh < qt and not found:
        x = queue[qh]
        qh += 1
        slot = head[x]
        while slot != -1:
            y = to[slot]
            if stamp[y] != tick:
                stamp[y] = tick
                prev[y] = x
                pslot[y] = slot
                if y == v:
                    found = True
                    break
                queue[qt] = y
                qt += 1
            slot = nxt[slot]
    if not found:
        return False, -1, -1
    if mode == 0:
        return True, 1, -1
    # fold from u towards v: collect v..u then walk backwards
    k = 0
    y = v
    while y != u:
        queue[k] = pslot[y]
        k += 1
        y = prev[y]
    acc = wt[queue[k - 1]]
    accw = wit[queue[k - 1]]
    for j in range(k - 2, -1, -1):
        s = queue[j]
        if mode == MODE_SUM:
            acc += wt[s]
        elif wt[s] > acc:
            acc = wt[s]
            accw = wit[s]
    return True, acc, accw


@njit(cache=True)
def run_oracle(ops, head, nxt, to, wt, wit, free, prev, pslot, stamp, queue, mode, out):
    n = head.shape[0]
    tick = 0
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        a = ops[i, 1]
        b = ops[i, 2]
        if op == LINK:
            e = a * n + b
            _add_half(head, nxt, to, wt, wit, free, a, b, ops[i, 3], e)
            _add_half(head, nxt, to, wt, wit, free, b, a, ops[i, 3], e)
        elif op == CUT:
            _remove_half(head, nxt, to, free, a, b)
            _remove_half(head, nxt, to, free, b, a)
        elif op == PATH:
            tick += 1
            found, w, _ = oracle_path(
                head, nxt, to, wt, wit, prev, pslot, stamp, queue, tick, a, b, mode
            )
            out[i] = w if found else -1
    return tick


# ---------------------------------------------------------------------------
# explicit rooted forest


@njit(cache=True)
def simple_root(parent, v):
    while parent[v] != -1:
        v = parent[v]
    return v


@njit(cache=True)
def run_simple(ops, parent, stamp, out):
    tick = 0
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        a = ops[i, 1]
        b = ops[i, 2]
        if op == RLINK:
            parent[a] = b
        elif op == RCUT:
            parent[a] = -1
        elif op == FINDROOT:
            out[i] = simple_root(parent, a)
        elif op == LCA:
            tick += 1
            x = a
            while x != -1:
                stamp[x] = tick
                x = parent[x]
            x = b
            while x != -1 and stamp[x] != tick:
                x = parent[x]
            out[i] = x
        elif op == EVERT:
            prev = -1
            x = a
            while x != -1:
                nx = parent[x]
                parent[x] = prev
                prev = x
                x = nx
