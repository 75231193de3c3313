"""Incremental minimum spanning forests, an offline Kruskal oracle, and
collaboration-file ingestion.

An edge enters the forest if its endpoints are disconnected, or if the
heaviest edge on the current path between them is strictly heavier; that
edge is then cut.  Weight decreases first cut the edge if it is in the forest
and then re-insert it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from ._jit import lct as jlct
from ._jit import msf as jmsf
from ._jit import stt as jstt
from ._jit.common import MODE_MAX
from .engine import UNROOTED, Impl
from .forest import SttDynamicForest
from .weights import MAX_EDGE, MaxEdge
from .workloads import SplitMix64

W_MAX = 1 << 32
INSERT, DECREASE = jmsf.INSERT, jmsf.DECREASE


class CollabFormatError(ValueError):
    pass


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class IncrementalMsf:
    """Reference implementation over any forest with max-edge weights."""

    def __init__(self, n: int, forest_factory: Callable[[int], object] | None = None):
        self.n = n
        if forest_factory is None:
            forest_factory = lambda k: SttDynamicForest(k, "greedy", MAX_EDGE)  # noqa: E731
        self.forest = forest_factory(n)
        self.weight: dict[tuple[int, int], int] = {}
        self.in_msf: set[tuple[int, int]] = set()
        self.total = 0
        self.replacements = 0

    def insert(self, u: int, v: int, w: int) -> bool:
        """Offer edge {u, v} of weight ``w``; returns whether it joined the forest."""
        if u == v:
            return False
        e = _key(u, v)
        self.weight[e] = w
        heaviest = self.forest.path_weight(u, v)
        if heaviest is not None:
            if heaviest.weight <= w:
                return False
            a, b = heaviest.witness
            self.forest.cut(a, b)
            self.in_msf.discard((a, b))
            self.total -= self.weight[(a, b)]
            self.replacements += 1
        self.forest.link(u, v, MaxEdge(w, e))
        self.in_msf.add(e)
        self.total += w
        return True

    def decrease(self, u: int, v: int, w: int) -> bool:
        e = _key(u, v)
        if e not in self.weight:
            raise KeyError(f"edge {e} was never inserted")
        if e in self.in_msf:
            self.forest.cut(*e)
            self.in_msf.discard(e)
            self.total -= self.weight[e]
        return self.insert(u, v, w)

    def edges(self) -> dict[tuple[int, int], int]:
        return {e: self.weight[e] for e in self.in_msf}


def kruskal(n: int, edges: Iterable[tuple[int, int, int]]) -> tuple[set[tuple[int, int]], int]:
    """Minimum spanning forest by sort + union-find."""
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    chosen = set()
    total = 0
    for u, v, w in sorted(edges, key=lambda t: t[2]):
        a, b = find(u), find(v)
        if a != b:
            uf[a] = b
            chosen.add(_key(u, v))
            total += w
    return chosen, total


@dataclass
class EdgeStream:
    """Insert/decrease events over dense edge ids.

    ``events`` rows are ``(kind, edge id, weight)``; ``eu``/``ev`` give the
    endpoints of each edge id.
    """

    n: int
    events: np.ndarray
    eu: np.ndarray
    ev: np.ndarray
    labels: list[str] = field(default_factory=list)

    @property
    def num_edges(self) -> int:
        return int(self.eu.shape[0])

    def final_weights(self) -> np.ndarray:
        w = np.zeros(self.num_edges, dtype=np.int64)
        w[self.events[:, 1]] = self.events[:, 2]
        return w

    def iter_events(self) -> Iterator[tuple[int, int, int, int]]:
        for kind, e, w in self.events.tolist():
            yield kind, int(self.eu[e]), int(self.ev[e]), w


class _StreamBuilder:
    def __init__(self):
        self.ids: dict[tuple[int, int], int] = {}
        self.rows: list[tuple[int, int, int]] = []
        self.eu: list[int] = []
        self.ev: list[int] = []

    def add(self, u: int, v: int, w: int) -> None:
        k = _key(u, v)
        e = self.ids.get(k)
        if e is None:
            e = self.ids[k] = len(self.eu)
            self.eu.append(k[0])
            self.ev.append(k[1])
            self.rows.append((INSERT, e, w))
        else:
            self.rows.append((DECREASE, e, w))

    def build(self, n: int, labels=None) -> EdgeStream:
        ev = np.array(self.rows, dtype=np.int64).reshape(-1, 3)
        return EdgeStream(
            n, ev, np.array(self.eu, dtype=np.int64), np.array(self.ev, dtype=np.int64), labels or []
        )


def random_stream(n: int, m: int, seed: int, p_decrease: float = 0.2) -> EdgeStream:
    """Random inserts with weights below ``2^20`` plus occasional decreases."""
    rng = SplitMix64(seed)
    b = _StreamBuilder()
    current: dict[int, int] = {}
    for _ in range(m):
        if b.eu and rng.random() < p_decrease:
            e = rng.randbelow(len(b.eu))
            if current[e] > 1:
                w = 1 + rng.randbelow(current[e] - 1)
                current[e] = w
                b.add(b.eu[e], b.ev[e], w)
                continue
        u = rng.randbelow(n)
        v = rng.randbelow(n - 1)
        v += v >= u
        w = 1 + rng.randbelow(1 << 20)
        k = _key(u, v)
        if k in b.ids:
            e = b.ids[k]
            if w >= current[e]:
                continue
        b.add(u, v, w)
        current[b.ids[k]] = w
    return b.build(n)


def parse_collab(lines: Iterable[str]) -> EdgeStream:
    """Rows ``author_a author_b year``, sorted by year.

    The first collaboration of a pair inserts weight ``W_MAX - 1``; every
    further one decreases it by one.  Self-collaborations are skipped.
    """
    labels: dict[str, int] = {}
    counts: dict[tuple[int, int], int] = {}
    b = _StreamBuilder()
    last_year = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise CollabFormatError(f"line {lineno}: expected 3 fields, got {len(parts)}")
        a, c, year_s = parts
        try:
            year = int(year_s)
        except ValueError:
            raise CollabFormatError(f"line {lineno}: bad year {year_s!r}") from None
        if last_year is not None and year < last_year:
            raise CollabFormatError(f"line {lineno}: year {year} before {last_year}; rows must be sorted")
        last_year = year
        u = labels.setdefault(a, len(labels))
        v = labels.setdefault(c, len(labels))
        if u == v:
            continue
        k = _key(u, v)
        counts[k] = counts.get(k, 0) + 1
        b.add(u, v, W_MAX - counts[k])
    names = sorted(labels, key=labels.get)
    return b.build(max(len(labels), 1), names)


def ingest_collab(path: str | Path) -> EdgeStream:
    with open(path) as fh:
        return parse_collab(fh)


def synthetic_collab(n: int, rows: int, seed: int, p_repeat: float = 0.35) -> list[str]:
    """Collaboration-like rows: repeated pairs and a skew towards active authors."""
    rng = SplitMix64(seed)
    pairs: list[tuple[int, int]] = []
    out = []
    for i in range(rows):
        year = 1990 + (30 * i) // max(rows, 1)
        if pairs and rng.random() < p_repeat:
            a, b = pairs[rng.randbelow(len(pairs))]
        else:
            # squaring a uniform value favours low ids
            a = int(n * rng.random() ** 2)
            b = rng.randbelow(n)
            pairs.append((a, b))
        out.append(f"a{a} a{b} {year}")
    return out


@dataclass
class MsfResult:
    impl: str
    n: int
    m: int
    total: int
    rotations: int
    seconds: float
    chosen: np.ndarray | None = None

    @property
    def us_per_edge(self) -> float:
        return 1e6 * self.seconds / max(self.m, 1)


def run_compiled(stream: EdgeStream, impl: Impl | str = "stable-greedy") -> MsfResult:
    if isinstance(impl, str):
        impl = UNROOTED[impl]
    n = stream.n
    cnt = np.zeros(2, dtype=np.int64)
    in_msf = np.zeros(stream.num_edges, dtype=np.bool_)
    cur_w = np.zeros(stream.num_edges, dtype=np.int64)
    strat, stable = 0, False
    if impl.family == "stt":
        fam, s = jmsf.FAM_STT, jstt.new_state(n, MODE_MAX)
        strat, stable = jstt.STRATEGY_IDS[impl.strategy], impl.stable
    elif impl.family == "link-cut":
        fam, s = jmsf.FAM_LCT, jlct.new_state(n, MODE_MAX)
    elif impl.family == "1-cut":
        fam, s = jmsf.FAM_ONECUT, np.full((3, n), -1, dtype=np.int64)
    else:
        raise ValueError(f"{impl.name} has no compiled MSF driver")
    t0 = time.perf_counter()
    total = jmsf.run_msf(fam, s, cnt, stream.events, stream.eu, stream.ev, in_msf, cur_w, stable, strat)
    dt = time.perf_counter() - t0
    return MsfResult(impl.name, n, len(stream.events), int(total), int(cnt[0]), dt, in_msf)


def warm_up(impl: Impl | str) -> None:
    """Trigger compilation on a tiny stream so later timings exclude it."""
    tiny = random_stream(8, 32, 0)
    run_compiled(tiny, impl)
    run_kruskal(tiny)


def run_kruskal(stream: EdgeStream) -> MsfResult:
    """Offline comparator on the final weight of every pair."""
    t0 = time.perf_counter()
    w = stream.final_weights()
    order = np.argsort(w, kind="stable")
    chosen = np.zeros(stream.num_edges, dtype=np.bool_)
    total = jmsf.kruskal(stream.n, stream.eu, stream.ev, w, order, chosen)
    dt = time.perf_counter() - t0
    return MsfResult("kruskal", stream.n, len(stream.events), int(total), 0, dt, chosen)


def run_python(stream: EdgeStream, forest_factory=None) -> IncrementalMsf:
    msf = IncrementalMsf(stream.n, forest_factory)
    for kind, u, v, w in stream.iter_events():
        if kind == INSERT:
            msf.insert(u, v, w)
        else:
            msf.decrease(u, v, w)
    return msf
