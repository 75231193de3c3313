"""Implementation catalog and script replay for both engines.

``compiled`` runs the numba kernels; ``python`` runs the reference classes.
Both produce the same per-query results, checksums and rotation counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from ._jit import lct as jlct
from ._jit import simple as jsimple
from ._jit import stt as jstt
from ._jit.common import (
    CUT,
    EVERT,
    FINDROOT,
    LCA,
    LINK,
    MODE_MAX,
    MODE_ROOTED,
    MODE_SUM,
    MODE_UNIT,
    PATH,
    QUERY_OPS,
    RCUT,
    RLINK,
    checksum,
)
from .baselines import LinkCutForest, NaiveForest, OneCutForest, SimpleRooted
from .forest import SttDynamicForest
from .rooted import RootedSttForest
from .weights import MAX_EDGE, SUM, MaxEdge
from .workloads import QueryScript

WEIGHT_MODES = {"unit": MODE_UNIT, "sum": MODE_SUM, "max": MODE_MAX}


@dataclass(frozen=True)
class Impl:
    """Catalog entry: ``family`` is stt, link-cut, 1-cut, oracle or simple."""

    name: str
    family: str
    strategy: str | None = None
    stable: bool = False


UNROOTED: dict[str, Impl] = {
    i.name: i
    for i in [
        Impl("link-cut", "link-cut"),
        Impl("greedy", "stt", "greedy"),
        Impl("stable-greedy", "stt", "greedy", True),
        Impl("2p", "stt", "2p"),
        Impl("stable-2p", "stt", "2p", True),
        Impl("l2p", "stt", "l2p"),
        Impl("stable-l2p", "stt", "l2p", True),
        Impl("mtr", "stt", "mtr"),
        Impl("stable-mtr", "stt", "mtr", True),
        Impl("1-cut", "1-cut"),
        Impl("oracle", "oracle"),
    ]
}

ROOTED: dict[str, Impl] = {
    i.name: i
    for i in [
        Impl("greedy", "stt", "greedy"),
        Impl("2p", "stt", "2p"),
        Impl("l2p", "stt", "l2p"),
        Impl("mtr", "stt", "mtr"),
        Impl("link-cut", "link-cut"),
        Impl("simple", "simple"),
    ]
}

STT_SPLAY = ("greedy", "stable-greedy", "2p", "stable-2p", "l2p", "stable-l2p")
ORACLE_MAX_N = 1000


def catalog(rooted: bool) -> dict[str, Impl]:
    return ROOTED if rooted else UNROOTED


def resolve(names: str | list[str], rooted: bool, n: int) -> list[Impl]:
    """Expand ``"all"`` and comma lists; the oracle joins ``all`` only for small ``n``."""
    cat = catalog(rooted)
    if isinstance(names, str):
        names = [x.strip() for x in names.split(",") if x.strip()]
    out: list[Impl] = []
    for name in names:
        if name == "all":
            out.extend(
                i for i in cat.values() if i.family != "oracle" or n <= ORACLE_MAX_N
            )
        elif name in cat:
            out.append(cat[name])
        else:
            kind = "rooted" if rooted else "unrooted"
            raise KeyError(f"unknown {kind} implementation {name!r}; choose from {sorted(cat)}")
    return out


@dataclass
class Replay:
    out: np.ndarray
    rotations: int
    checksum: int


def _new_out(script: QueryScript) -> np.ndarray:
    return np.full(len(script), -1, dtype=np.int64)


def prepare_compiled(impl: Impl, script: QueryScript, weight: str = "unit") -> Callable[[], Replay]:
    """Build fresh state and return a zero-argument runner (construction is untimed)."""
    ops = np.ascontiguousarray(script.ops, dtype=np.int64)
    n = script.n
    rooted = script.rooted
    mode = MODE_ROOTED if rooted else WEIGHT_MODES[weight]
    cnt = np.zeros(2, dtype=np.int64)
    out = _new_out(script)
    fam = impl.family
    if fam == "stt":
        st = jstt.new_state(n, mode)
        sid = jstt.STRATEGY_IDS[impl.strategy]

        def go():
            jstt.run(ops, st, cnt, impl.stable, sid, mode, out)
    elif fam == "link-cut":
        lmode = MODE_UNIT if rooted else mode
        s = jlct.new_state(n, lmode)
        reversible = not rooted or bool(np.any(ops[:, 0] == EVERT))

        def go():
            jlct.run(ops, s, cnt, lmode, reversible, out)
    elif fam == "1-cut":
        s = np.full((3, n), -1, dtype=np.int64)

        def go():
            jsimple.run_onecut(ops, s, cnt, mode, out)
    elif fam == "oracle":
        o = jsimple.OracleState(n, n)

        def go():
            jsimple.run_oracle(
                ops, o.head, o.nxt, o.to, o.wt, o.wit, o.free, o.prev, o.pslot,
                o.stamp, o.queue, mode, out,
            )
    elif fam == "simple":
        parent = np.full(n, -1, dtype=np.int64)
        stamp = np.zeros(n, dtype=np.int64)

        def go():
            jsimple.run_simple(ops, parent, stamp, out)
    else:
        raise KeyError(fam)

    def runner() -> Replay:
        go()
        return Replay(out, int(cnt[0]), int(checksum(ops, out)))

    return runner


def _encode(x: Any) -> int:
    if x is None:
        return -1
    if x is True:
        return 1
    if isinstance(x, MaxEdge):
        return int(x.weight)
    return int(x)


def make_python(impl: Impl, n: int, rooted: bool, weight: str = "unit", checked: bool = False):
    w = {"unit": None, "sum": SUM, "max": MAX_EDGE}[weight]
    fam = impl.family
    if rooted:
        if fam == "stt":
            return RootedSttForest(n, impl.strategy, checked=checked)
        if fam == "link-cut":
            return LinkCutForest(n, checked=checked)
        if fam == "simple":
            return SimpleRooted(n)
    else:
        if fam == "stt":
            return SttDynamicForest(n, impl.strategy, w, stable=impl.stable, checked=checked)
        if fam == "link-cut":
            return LinkCutForest(n, w, checked=checked)
        if fam == "1-cut":
            return OneCutForest(n, w)
        if fam == "oracle":
            return NaiveForest(n, w)
    raise KeyError(f"{impl.name} does not support {'rooted' if rooted else 'unrooted'} scripts")


def prepare_python(impl: Impl, script: QueryScript, weight: str = "unit", checked: bool = False):
    n = script.n
    rooted = script.rooted
    f = make_python(impl, n, rooted, weight, checked)
    ops = script.ops
    out = _new_out(script)
    wrap = weight == "max"
    lct = isinstance(f, LinkCutForest)

    def runner() -> Replay:
        for i, (op, a, b, w) in enumerate(script.rows()):
            if op == LINK:
                f.link(a, b, MaxEdge(w, a * n + b) if wrap else (w if weight == "sum" else None))
            elif op == CUT:
                f.cut(a, b)
            elif op == PATH:
                out[i] = _encode(f.path_weight(a, b))
            elif op == RLINK:
                (f.rooted_link if lct else f.link)(a, b)
            elif op == RCUT:
                (f.rooted_cut if lct else f.cut)(a)
            elif op == LCA:
                out[i] = _encode(f.lca(a, b))
            elif op == EVERT:
                f.evert(a)
            elif op == FINDROOT:
                out[i] = _encode(f.find_root(a))
        rot = getattr(f, "rotations", 0)
        return Replay(out, int(rot), int(checksum(ops, out)))

    runner.forest = f
    return runner


def prepare(impl: Impl, script: QueryScript, weight: str = "unit", engine: str = "compiled"):
    if script.rooted and impl.family in ("1-cut", "oracle"):
        raise ValueError(f"{impl.name} cannot run rooted scripts")
    if not script.rooted and impl.family == "simple":
        raise ValueError(f"{impl.name} cannot run unrooted scripts")
    if engine == "compiled":
        return prepare_compiled(impl, script, weight)
    if engine == "python":
        return prepare_python(impl, script, weight)
    raise ValueError(f"unknown engine {engine!r}")


def replay(impl: Impl | str, script: QueryScript, weight: str = "unit", engine: str = "compiled") -> Replay:
    if isinstance(impl, str):
        impl = catalog(script.rooted)[impl]
    return prepare(impl, script, weight, engine)()


def query_results(script: QueryScript, out: np.ndarray) -> np.ndarray:
    mask = np.isin(script.ops[:, 0], QUERY_OPS)
    return out[mask]
