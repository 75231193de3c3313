"""Compiled 2-cut search forests.

State is one ``(8, n)`` int64 array; see the row constants below.  In sum
mode an absent ``pdist`` is stored as 0, in max mode as -1; neither is ever
read while absent.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .common import (
    CUT,
    EVERT,
    FINDROOT,
    LCA,
    LINK,
    MODE_MAX,
    MODE_ROOTED,
    MODE_SUM,
    PATH,
    RCUT,
    RLINK,
)

PAR, DSEP, ISEP, PW, PWIT, AW, AWIT, DROOT = range(8)
MTR, GREEDY, TWO_PASS, L2P = 0, 1, 2, 3
STRATEGY_IDS = {"mtr": MTR, "greedy": GREEDY, "2p": TWO_PASS, "l2p": L2P}


def new_state(n: int, mode: int) -> np.ndarray:
    st = np.full((8, n), -1, dtype=np.int64)
    st[PW] = 0 if mode == MODE_SUM else -1
    if mode == MODE_ROOTED:
        st[DROOT] = np.arange(n)
    return st


@njit(cache=True)
def is_sep_hint(st, v, p):
    return st[DSEP, p] == v or st[ISEP, p] == v


@njit(cache=True)
def is_sep(st, v):
    p = st[PAR, v]
    return p != -1 and (st[DSEP, p] == v or st[ISEP, p] == v)


@njit(cache=True)
def root_of(st, v):
    while st[PAR, v] != -1:
        v = st[PAR, v]
    return v


@njit(cache=True)
def rotate(st, cnt, v, mode):
    p = st[PAR, v]
    g = st[PAR, p]
    c = st[DSEP, v]
    if g == -1:
        v_direct = False
        p_sep = False
    else:
        v_direct = st[DSEP, p] == v
        p_sep = st[DSEP, g] == p or st[ISEP, g] == p

    if mode == MODE_SUM:
        pv = st[PW, v]
        pp = st[PW, p]
        if c != -1:
            st[PW, c] = pv - st[PW, c]
        st[PW, p] = pv
        if g == -1:
            st[PW, v] = 0
        elif v_direct:
            st[PW, v] = pp - pv
        else:
            st[PW, v] = pv + pp
    elif mode == MODE_MAX:
        pv, pvw = st[PW, v], st[PWIT, v]
        pp, ppw = st[PW, p], st[PWIT, p]
        av, avw = st[AW, v], st[AWIT, v]
        ap, apw = st[AW, p], st[AWIT, p]
        if c != -1:
            t, tw = st[PW, c], st[PWIT, c]
            st[PW, c], st[PWIT, c] = st[AW, c], st[AWIT, c]
            st[AW, c], st[AWIT, c] = t, tw
        st[PW, p], st[PWIT, p] = pv, pvw
        if g == -1:
            st[PW, v], st[PWIT, v] = -1, -1
            st[AW, v], st[AWIT, v] = -1, -1
            st[AW, p], st[AWIT, p] = -1, -1
        elif v_direct:
            st[PW, v], st[PWIT, v] = av, avw
            if p_sep:
                if pv >= ap:
                    st[AW, v], st[AWIT, v] = pv, pvw
                else:
                    st[AW, v], st[AWIT, v] = ap, apw
            else:
                st[AW, v], st[AWIT, v] = -1, -1
                st[AW, p], st[AWIT, p] = -1, -1
        else:
            if pv >= pp:
                st[PW, v], st[PWIT, v] = pv, pvw
            else:
                st[PW, v], st[PWIT, v] = pp, ppw
            st[AW, p], st[AWIT, p] = pp, ppw
            if p_sep:
                st[AW, v], st[AWIT, v] = av, avw
            else:
                st[AW, v], st[AWIT, v] = -1, -1
    elif mode == MODE_ROOTED:
        dv = st[DROOT, v]
        dp = st[DROOT, p]
        st[DROOT, v] = dp
        if dp != -1 and dv != -1:
            if c == -1 or st[DROOT, c] == -1:
                st[DROOT, p] = -1

    dp_ = st[DSEP, p]
    ip_ = st[ISEP, p]
    if dp_ == v:
        other = ip_
    elif ip_ == v:
        other = dp_
    elif dp_ != -1:
        other = dp_
    else:
        other = ip_
    if g == -1:
        st[DSEP, v] = -1
        st[ISEP, v] = -1
    else:
        if st[DSEP, g] == p:
            st[DSEP, g] = v
        elif st[ISEP, g] == p:
            st[ISEP, g] = v
        if v_direct:
            st[DSEP, v] = st[ISEP, v]
            st[ISEP, v] = p if p_sep else -1
        else:
            st[DSEP, v] = p
    st[DSEP, p] = c
    st[ISEP, p] = other
    if c != -1:
        st[PAR, c] = p
        t = st[DSEP, c]
        st[DSEP, c] = st[ISEP, c]
        st[ISEP, c] = t
    st[PAR, v] = g
    st[PAR, p] = v
    cnt[0] += 1


@njit(cache=True)
def can_splay_step(st, v, top):
    p = st[PAR, v]
    g = st[PAR, p]
    if g == top:
        return True
    if not is_sep(st, g):
        return True
    return is_sep_hint(st, v, p) and is_sep_hint(st, p, g)


@njit(cache=True)
def splay_step(st, cnt, v, top, mode):
    p = st[PAR, v]
    cnt[1] += 1
    if st[PAR, p] == top:
        rotate(st, cnt, v, mode)
    elif st[DSEP, p] == v:
        rotate(st, cnt, v, mode)
        rotate(st, cnt, v, mode)
    else:
        rotate(st, cnt, p, mode)
        rotate(st, cnt, v, mode)


@njit(cache=True)
def splay_to(st, cnt, x, y, top, mode):
    while st[PAR, x] != y and st[PAR, st[PAR, x]] != y:
        splay_step(st, cnt, x, top, mode)
    if st[PAR, x] != y:
        rotate(st, cnt, x, mode)


@njit(cache=True)
def climb_mtr(st, cnt, v, top, mode):
    while True:
        p = st[PAR, v]
        if p == top:
            return
        if is_sep_hint(st, v, p):
            rotate(st, cnt, v, mode)
            continue
        g = st[PAR, p]
        if g != -1 and is_sep_hint(st, p, g):
            rotate(st, cnt, p, mode)
        else:
            rotate(st, cnt, v, mode)


@njit(cache=True)
def climb_greedy(st, cnt, v, top, mode):
    while True:
        p = st[PAR, v]
        if p == top:
            return
        g = st[PAR, p]
        if g == top:
            rotate(st, cnt, v, mode)
        elif can_splay_step(st, v, top):
            splay_step(st, cnt, v, top, mode)
        elif can_splay_step(st, p, top):
            splay_step(st, cnt, p, top, mode)
        else:
            splay_step(st, cnt, g, top, mode)


@njit(cache=True)
def climb_two_pass(st, cnt, v, top, mode, buf):
    k = 0
    x = v
    while True:
        p = st[PAR, x]
        if p == top:
            break
        if not is_sep_hint(st, x, p) and is_sep(st, p):
            buf[k] = p
            k += 1
        x = p
    if k > 0:
        splay_to(st, cnt, v, buf[0], top, mode)
        for i in range(k - 1):
            splay_to(st, cnt, buf[i], buf[i + 1], top, mode)
        last = buf[k - 1]
        while st[PAR, last] != top:
            splay_step(st, cnt, last, top, mode)
    while st[PAR, v] != top:
        splay_step(st, cnt, v, top, mode)


@njit(cache=True)
def climb_l2p(st, cnt, v, top, mode):
    while True:
        p = st[PAR, v]
        if p == top:
            return
        g = st[PAR, p]
        if g == top:
            rotate(st, cnt, v, mode)
        elif can_splay_step(st, v, top):
            splay_step(st, cnt, v, top, mode)
        elif is_sep_hint(st, p, g):
            splay_step(st, cnt, p, top, mode)
        elif can_splay_step(st, g, top):
            splay_step(st, cnt, g, top, mode)
        else:
            rotate(st, cnt, g, mode)


@njit(cache=True)
def climb(st, cnt, v, top, strat, mode, buf):
    if strat == MTR:
        climb_mtr(st, cnt, v, top, mode)
    elif strat == GREEDY:
        climb_greedy(st, cnt, v, top, mode)
    elif strat == TWO_PASS:
        climb_two_pass(st, cnt, v, top, mode, buf)
    else:
        climb_l2p(st, cnt, v, top, mode)


@njit(cache=True)
def ntr(st, cnt, v, strat, mode, buf):
    climb(st, cnt, v, -1, strat, mode, buf)


@njit(cache=True)
def nbr(st, cnt, v, strat, mode, buf):
    climb(st, cnt, v, root_of(st, v), strat, mode, buf)


# ---------------------------------------------------------------------------
# unrooted operations


@njit(cache=True)
def attach(st, u, v, w, wit, mode):
    st[PAR, u] = v
    if mode == MODE_SUM or mode == MODE_MAX:
        st[PW, u] = w
        st[PWIT, u] = wit
        st[AW, u] = -1
        st[AWIT, u] = -1
    elif mode == MODE_ROOTED:
        st[DROOT, u] = -1


@njit(cache=True)
def detach(st, u, mode):
    st[PAR, u] = -1
    if mode == MODE_SUM:
        st[PW, u] = 0
    elif mode == MODE_MAX:
        st[PW, u] = -1
        st[PWIT, u] = -1
        st[AW, u] = -1
        st[AWIT, u] = -1


@njit(cache=True)
def link(st, cnt, u, v, w, wit, strat, mode, buf):
    ntr(st, cnt, u, strat, mode, buf)
    ntr(st, cnt, v, strat, mode, buf)
    attach(st, u, v, w, wit, mode)


@njit(cache=True)
def _below_root(st, cnt, u, v, strat, mode, buf):
    r = root_of(st, u)
    if r != v:
        ntr(st, cnt, u, strat, mode, buf)
        return False
    climb(st, cnt, u, r, strat, mode, buf)
    return True


@njit(cache=True)
def cut(st, cnt, u, v, stable, strat, mode, buf):
    if stable:
        ntr(st, cnt, u, strat, mode, buf)
        ntr(st, cnt, v, strat, mode, buf)
    else:
        ntr(st, cnt, v, strat, mode, buf)
        _below_root(st, cnt, u, v, strat, mode, buf)
    detach(st, u, mode)


@njit(cache=True)
def path_weight(st, cnt, u, v, stable, strat, mode, buf):
    """Returns ``(found, weight, witness)``; unit weight reports 1."""
    if u == v:
        return True, (1 if mode == 0 else 0), -1
    if not stable:
        ntr(st, cnt, v, strat, mode, buf)
        if not _below_root(st, cnt, u, v, strat, mode, buf):
            return False, -1, -1
        if mode == 0:
            return True, 1, -1
        return True, st[PW, u], st[PWIT, u]
    ntr(st, cnt, u, strat, mode, buf)
    ntr(st, cnt, v, strat, mode, buf)
    acc = st[PW, u]
    accw = st[PWIT, u]
    x = st[PAR, u]
    hops = 1
    while x != v:
        if x == -1 or hops > 6:
            return False, -1, -1
        if mode == MODE_SUM:
            acc += st[PW, x]
        elif mode == MODE_MAX and st[PW, x] > acc:
            acc = st[PW, x]
            accw = st[PWIT, x]
        x = st[PAR, x]
        hops += 1
    if mode == 0:
        return True, 1, -1
    return True, acc, accw


# ---------------------------------------------------------------------------
# rooted operations (mode must be MODE_ROOTED)


@njit(cache=True)
def find_root(st, cnt, v, strat, buf):
    ntr(st, cnt, v, strat, MODE_ROOTED, buf)
    return st[DROOT, v]


@njit(cache=True)
def rooted_link(st, cnt, u, v, strat, buf):
    ntr(st, cnt, u, strat, MODE_ROOTED, buf)
    ntr(st, cnt, v, strat, MODE_ROOTED, buf)
    attach(st, u, v, 0, -1, MODE_ROOTED)


@njit(cache=True)
def rooted_cut(st, cnt, v, strat, buf):
    m = MODE_ROOTED
    ntr(st, cnt, v, strat, m, buf)
    r = st[DROOT, v]
    if r == v:
        return
    nbr(st, cnt, r, strat, m, buf)
    u = st[DSEP, r]
    if u == -1:
        u = r
    else:
        while st[ISEP, u] != -1:
            u = st[ISEP, u]
    ntr(st, cnt, v, strat, m, buf)
    nbr(st, cnt, u, strat, m, buf)
    detach(st, u, m)
    st[DROOT, v] = v


@njit(cache=True)
def lca(st, cnt, u, v, strat, buf):
    m = MODE_ROOTED
    ntr(st, cnt, v, strat, m, buf)
    if u == v:
        return v
    if root_of(st, u) != v:
        ntr(st, cnt, u, strat, m, buf)
        return -1
    nbr(st, cnt, u, strat, m, buf)
    if st[DROOT, u] == -1:
        return v
    x = st[DSEP, u]
    if x == -1 or st[DROOT, x] == -1:
        return u
    while True:
        d = st[DSEP, x]
        i = st[ISEP, x]
        if d != -1 and st[DROOT, d] != -1:
            x = d
        elif i != -1 and st[DROOT, i] != -1:
            x = i
        else:
            break
    ntr(st, cnt, x, strat, m, buf)
    return x


@njit(cache=True)
def evert(st, cnt, v, strat, buf):
    m = MODE_ROOTED
    ntr(st, cnt, v, strat, m, buf)
    r = st[DROOT, v]
    if r == v:
        return
    x = r
    while x != -1:
        st[DROOT, x] = -1
        x = st[PAR, x]
    st[DROOT, v] = v
    ntr(st, cnt, r, strat, m, buf)


# ---------------------------------------------------------------------------


@njit(cache=True)
def run(ops, st, cnt, stable, strat, mode, out):
    """Replay a script; query results go to ``out`` (-1 for "none")."""
    n = st.shape[1]
    buf = np.empty(n, dtype=np.int64)
    for i in range(ops.shape[0]):
        op = ops[i, 0]
        a = ops[i, 1]
        b = ops[i, 2]
        if op == LINK:
            link(st, cnt, a, b, ops[i, 3], a * n + b, strat, mode, buf)
        elif op == CUT:
            cut(st, cnt, a, b, stable, strat, mode, buf)
        elif op == PATH:
            found, w, _ = path_weight(st, cnt, a, b, stable, strat, mode, buf)
            out[i] = w if found else -1
        elif op == RLINK:
            rooted_link(st, cnt, a, b, strat, buf)
        elif op == RCUT:
            rooted_cut(st, cnt, a, strat, buf)
        elif op == LCA:
            out[i] = lca(st, cnt, a, b, strat, buf)
        elif op == EVERT:
            evert(st, cnt, a, strat, buf)
        elif op == FINDROOT:
            out[i] = find_root(st, cnt, a, strat, buf)
