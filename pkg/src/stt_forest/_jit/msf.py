"""Compiled incremental minimum spanning forest over any compiled forest family."""

from __future__ import annotations

import numpy as np
from numba import njit

from . import lct, simple, stt
from .common import MODE_MAX

INSERT, DECREASE = 0, 1
FAM_STT, FAM_LCT, FAM_ONECUT = 0, 1, 2


@njit(cache=True)
def _path(fam, s, cnt, u, v, stable, strat, buf):
    if fam == FAM_STT:
        return stt.path_weight(s, cnt, u, v, stable, strat, MODE_MAX, buf)
    if fam == FAM_LCT:
        return lct.path_weight(s, cnt, u, v, MODE_MAX, buf)
    return simple.onecut_path(s, cnt, u, v, MODE_MAX)


@njit(cache=True)
def _link(fam, s, cnt, u, v, w, e, strat, buf):
    if fam == FAM_STT:
        stt.link(s, cnt, u, v, w, e, strat, MODE_MAX, buf)
    elif fam == FAM_LCT:
        lct.link(s, cnt, u, v, w, e, MODE_MAX, buf)
    else:
        simple.onecut_to_root(s, cnt, u)
        simple.onecut_to_root(s, cnt, v)
        s[0, u] = v
        s[1, u] = w
        s[2, u] = e


@njit(cache=True)
def _cut(fam, s, cnt, u, v, stable, strat, buf):
    if fam == FAM_STT:
        stt.cut(s, cnt, u, v, stable, strat, MODE_MAX, buf)
    elif fam == FAM_LCT:
        lct.cut(s, cnt, u, v, MODE_MAX, buf)
    else:
        simple.onecut_to_root(s, cnt, u)
        simple.onecut_to_root(s, cnt, v)
        s[0, u] = -1
        s[1, u] = -1
        s[2, u] = -1


@njit(cache=True)
def run_msf(fam, s, cnt, events, eu, ev, in_msf, cur_w, stable, strat):
    """Replay ``events`` rows ``(kind, edge id, weight)``; returns the final total."""
    n = s.shape[1]
    buf = np.empty(n, dtype=np.int64)
    total = 0
    for i in range(events.shape[0]):
        kind = events[i, 0]
        e = events[i, 1]
        w = events[i, 2]
        u = eu[e]
        v = ev[e]
        if kind == DECREASE and in_msf[e]:
            _cut(fam, s, cnt, u, v, stable, strat, buf)
            in_msf[e] = False
            total -= cur_w[e]
        cur_w[e] = w
        found, mw, mwit = _path(fam, s, cnt, u, v, stable, strat, buf)
        if not found:
            _link(fam, s, cnt, u, v, w, e, strat, buf)
            in_msf[e] = True
            total += w
        elif mw > w:
            _cut(fam, s, cnt, eu[mwit], ev[mwit], stable, strat, buf)
            in_msf[mwit] = False
            total -= cur_w[mwit]
            _link(fam, s, cnt, u, v, w, e, strat, buf)
            in_msf[e] = True
            total += w
    return total


@njit(cache=True)
def _find(uf, x):
    r = x
    while uf[r] != r:
        r = uf[r]
    while uf[x] != r:
        nx = uf[x]
        uf[x] = r
        x = nx
    return r


@njit(cache=True)
def kruskal(n, eu, ev, w, order, chosen):
    uf = np.arange(n)
    total = 0
    for j in range(order.shape[0]):
        e = order[j]
        a = _find(uf, eu[e])
        b = _find(uf, ev[e])
        if a != b:
            uf[a] = b
            chosen[e] = True
            total += w[e]
    return total
