"""Shared oracles and generators for the test suite."""

from __future__ import annotations

import random
from collections import deque
from typing import Iterator

from stt_forest.core import SttForest

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def _canon(adj: list[list[int]], root: int, parent: int = -1) -> str:
    kids = sorted(_canon(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    deg = [len(a) for a in adj]
    leaves = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        nxt = []
        left -= len(leaves)
        for v in leaves:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return leaves


def tree_key(n: int, edges: list[tuple[int, int]]) -> str:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return min(_canon(adj, c) for c in _centers(adj))


def free_trees(n: int) -> list[list[tuple[int, int]]]:
    """One labelled representative of every unlabelled tree on ``n`` nodes."""
    if n == 1:
        return [[]]
    out: dict[str, list[tuple[int, int]]] = {}
    for base in free_trees(n - 1):
        for v in range(n - 1):
            edges = base + [(v, n - 1)]
            out.setdefault(tree_key(n, edges), edges)
    return list(out.values())


def all_stts(n: int, edges: list[tuple[int, int]]) -> Iterator[list[int | None]]:
    """Every 2-cut search tree on the tree ``edges``, as parent lists."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def components(nodes: frozenset[int]) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for s in nodes:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in nodes and y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def boundary(comp: frozenset[int]) -> int:
        return len({y for x in comp for y in adj[x] if y not in comp})

    def build(comp: frozenset[int]) -> Iterator[tuple[int, dict[int, int]]]:
        # yields (root, parent assignments below it)
        for r in sorted(comp):
            subs = [c for c in components(comp - {r})]
            if any(boundary(c) > 2 for c in subs):
                continue
            yield from _combine(r, subs, {})

    def _combine(r, subs, acc):
        if not subs:
            yield r, dict(acc)
            return
        for child, par in build(subs[0]):
            nxt = dict(acc)
            nxt.update(par)
            nxt[child] = r
            yield from _combine(r, subs[1:], nxt)

    for root, par in build(frozenset(range(n))):
        yield [par.get(v) for v in range(n)]


def random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    order = list(range(n))
    rng.shuffle(order)
    return [(order[i], order[rng.randrange(i)]) for i in range(1, n)]


def scramble(f: SttForest, rng: random.Random, rotations: int) -> None:
    """Apply random legal rotations."""
    nonroots = [v for v in range(f.n) if f.parent[v] is not None]
    if not nonroots:
        return
    done = 0
    while done < rotations:
        v = rng.randrange(f.n)
        if f.parent[v] is not None and f.can_rotate(v):
            f.rotate(v)
            done += 1


def bfs_dist(n: int, wedges: dict[tuple[int, int], object], combine, src: int) -> dict:
    """Path weights from ``src`` to everything in its tree (``src`` excluded)."""
    adj: list[list[tuple[int, object]]] = [[] for _ in range(n)]
    for (a, b), w in wedges.items():
        adj[a].append((b, w))
        adj[b].append((a, w))
    out = {}
    queue = deque([(src, None)])
    seen = {src}
    while queue:
        x, d = queue.popleft()
        for y, w in adj[x]:
            if y not in seen:
                seen.add(y)
                out[y] = w if d is None else combine(d, w)
                queue.append((y, out[y]))
    return out


# ---------------------------------------------------------------------------
# instrumented runs


class LegalityProbe:
    """Listener that checks the rotation-validity predicate before every rotation."""

    def __init__(self, f: SttForest):
        self.f = f
        self.rotations = 0
        self.violations = 0

    def on_rotate(self, ctx) -> None:
        self.rotations += 1
        if not self.f.can_rotate(ctx.v):
            self.violations += 1

    def on_attach(self, u, v, payload) -> None:
        pass

    def on_detach(self, u) -> None:
        pass


class _TreeIndex:
    """Rooted copy of a weighted forest answering sum distances by climbing."""

    def __init__(self, n: int, wedges: dict[tuple[int, int], int]):
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (a, b), w in wedges.items():
            adj[a].append((b, w))
            adj[b].append((a, w))
        self.par = [-1] * n
        self.depth = [0] * n
        self.dsum = [0] * n
        seen = [False] * n
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, w in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        self.par[y] = x
                        self.depth[y] = self.depth[x] + 1
                        self.dsum[y] = self.dsum[x] + w
                        queue.append(y)

    def dist(self, a: int, b: int) -> int:
        x, y = a, b
        while self.depth[x] > self.depth[y]:
            x = self.par[x]
        while self.depth[y] > self.depth[x]:
            y = self.par[y]
        while x != y:
            x, y = self.par[x], self.par[y]
        return self.dsum[a] + self.dsum[b] - 2 * self.dsum[x]


def annotation_errors(stt: SttForest, group_data, monoid_data, wedges) -> int:
    """Count pdist/adist entries that disagree with brute-force distances."""
    idx = _TreeIndex(stt.n, wedges)
    bnd = stt.designated_boundaries()
    bad = 0
    for v in range(stt.n):
        p = stt.parent[v]
        if p is None:
            bad += group_data.pdist[v] is not None
            bad += monoid_data.pdist[v] is not None
            continue
        d = idx.dist(v, p)
        bad += group_data.pdist[v] != d
        bad += monoid_data.pdist[v] != d
        if len(bnd[v]) == 2:
            other = bnd[v][0] if bnd[v][1] == p else bnd[v][1]
            bad += monoid_data.adist[v] != idx.dist(v, other)
        else:
            bad += monoid_data.adist[v] is not None
    return bad


def make_probe_forest(n: int, strategy: str, stable: bool):
    """Instrumented SUM-weighted forest with both annotation maintainers attached.

    Returns ``(forest, monoid_data, legality, stability_log)``.
    """
    from stt_forest.forest import SttDynamicForest, stability_violation
    from stt_forest.weights import SUM, MonoidPathData

    log: list[str] = []

    class Probe(SttDynamicForest):
        def node_to_root(self, v: int) -> None:
            old = self.stt.root_of(v)
            super().node_to_root(v)
            if self.stable:
                problem = stability_violation(self.stt, old)
                if problem:
                    log.append(problem)

    f = Probe(n, strategy, SUM, stable=stable, instrumented=True)
    mono = MonoidPathData(SUM, n)
    legality = LegalityProbe(f.stt)
    f.stt.listeners.extend([mono, legality])
    return f, mono, legality, log


def exhaustive_legality(max_n: int, strategies) -> dict[str, int]:
    """Run every strategy from every node of every 2-cut STT on trees with n <= max_n.

    Each run uses both entry points (to the root, and below the root) on a
    fresh copy and ends with a brute-force validation.
    """
    from stt_forest.heuristics import get_strategy

    stats = {"stts": 0, "runs": 0, "rotations": 0, "illegal": 0, "invalid": 0}
    strats = [get_strategy(s) for s in strategies]
    for n in range(1, max_n + 1):
        for edges in free_trees(n):
            for parent in all_stts(n, edges):
                base = SttForest.from_structure(n, parent, edges, checked=False)
                stats["stts"] += 1
                for strat in strats:
                    for v in range(n):
                        for below in (False, True):
                            if below and base.parent[v] is None:
                                continue
                            f = base.copy()
                            probe = LegalityProbe(f)
                            f.listeners.append(probe)
                            if below:
                                strat.node_below_root(f, v)
                                ok = f.parent[f.parent[v]] is None
                            else:
                                strat.node_to_root(f, v)
                                ok = f.parent[v] is None
                            stats["runs"] += 1
                            stats["rotations"] += probe.rotations
                            stats["illegal"] += probe.violations
                            if not ok or not f.validate():
                                stats["invalid"] += 1
    return stats
