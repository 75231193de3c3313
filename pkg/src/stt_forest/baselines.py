"""Comparison structures: an adjacency-list oracle, 1-cut rootings, link-cut trees
and an explicit parent-pointer rooted forest."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any

from .core import InvalidOperation
from .weights import UNIT, Monoid


class NaiveForest:
    """Ground truth: adjacency maps plus a BFS per query."""

    def __init__(self, n: int, weight: Monoid | None = None):
        self.n = n
        self.weight = weight
        self.adj: list[dict[int, Any]] = [{} for _ in range(n)]
        self.rotations = 0

    def path(self, u: int, v: int) -> list[int] | None:
        """Vertices of the u-v path, or ``None`` if disconnected."""
        if u == v:
            return [u]
        prev = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    if y == v:
                        out = [v]
                        while out[-1] != u:
                            out.append(prev[out[-1]])
                        return out[::-1]
                    queue.append(y)
        return None

    def link(self, u: int, v: int, w: Any = None) -> None:
        if u == v or self.path(u, v) is not None:
            raise InvalidOperation(f"link({u}, {v}): already connected")
        self.adj[u][v] = w
        self.adj[v][u] = w

    def cut(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise InvalidOperation(f"cut({u}, {v}): no such edge")
        del self.adj[u][v]
        del self.adj[v][u]

    def path_weight(self, u: int, v: int) -> Any:
        p = self.path(u, v)
        if p is None:
            return None
        if self.weight is None:
            return True
        if len(p) == 1:
            return self.weight.identity
        acc = self.adj[p[0]][p[1]]
        for a, b in zip(p[1:], p[2:]):
            acc = self.weight.combine(acc, self.adj[a][b])
        return acc

    def edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a in range(self.n) for b in self.adj[a] if a < b}


class OneCutForest:
    """Every search tree is a rooting of its underlying tree.

    Moving a node to the root reverses the parent pointers on its root path,
    one rotation per reversed edge, so operations take linear time.  Like the
    stable search-tree driver, every operation first moves ``u`` and then
    ``v`` to the root; a path query then walks from ``u`` up to ``v``.
    """

    def __init__(self, n: int, weight: Monoid | None = None):
        self.n = n
        self.weight = weight
        self.parent: list[int | None] = [None] * n
        self.pw: list[Any] = [None] * n
        self.rotations = 0

    def node_to_root(self, v: int) -> None:
        parent, pw = self.parent, self.pw
        prev, prev_w, x = None, None, v
        while x is not None:
            nxt, nxt_w = parent[x], pw[x]
            parent[x], pw[x] = prev, prev_w
            prev, prev_w, x = x, nxt_w, nxt
            if x is not None:
                self.rotations += 1

    def link(self, u: int, v: int, w: Any = None) -> None:
        self.node_to_root(u)
        self.node_to_root(v)
        if u == v or self.parent[u] is not None:
            raise InvalidOperation(f"link({u}, {v}): already connected")
        self.parent[u] = v
        self.pw[u] = w

    def cut(self, u: int, v: int) -> None:
        self.node_to_root(u)
        self.node_to_root(v)
        if self.parent[u] != v:
            raise InvalidOperation(f"cut({u}, {v}): no such edge")
        self.parent[u] = None
        self.pw[u] = None

    def path_weight(self, u: int, v: int) -> Any:
        if u == v:
            return (self.weight or UNIT).identity
        self.node_to_root(u)
        self.node_to_root(v)
        parent, pw = self.parent, self.pw
        acc = None
        x = u
        while x != v:
            if parent[x] is None:
                return None
            if self.weight is not None:
                acc = pw[x] if acc is None else self.weight.combine(acc, pw[x])
            x = parent[x]
        return True if self.weight is None else acc

    def underlying_edges(self) -> set[tuple[int, int]]:
        return {(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None}


class SimpleRooted:
    """Rooted forest kept as explicit parent pointers."""

    def __init__(self, n: int):
        self.n = n
        self.parent: list[int | None] = [None] * n
        self.rotations = 0

    def find_root(self, v: int) -> int:
        parent = self.parent
        while (p := parent[v]) is not None:
            v = p
        return v

    def link(self, u: int, v: int) -> None:
        if self.parent[u] is not None or self.find_root(v) == u:
            raise InvalidOperation(f"link({u}, {v}): {u} is not a root of another tree")
        self.parent[u] = v

    def cut(self, v: int) -> None:
        if self.parent[v] is None:
            raise InvalidOperation(f"cut({v}): {v} is a tree root")
        self.parent[v] = None

    def lca(self, u: int, v: int) -> int | None:
        seen = set()
        x = u
        while x is not None:
            seen.add(x)
            x = self.parent[x]
        x = v
        while x is not None:
            if x in seen:
                return x
            x = self.parent[x]
        return None

    def evert(self, v: int) -> None:
        parent = self.parent
        prev, x = None, v
        while x is not None:
            parent[x], prev, x = prev, x, parent[x]


@dataclass
class _LctArrays:
    n: int
    left: list = field(init=False)
    right: list = field(init=False)
    par: list = field(init=False)
    rev: list = field(init=False)
    wl: list = field(init=False)
    wr: list = field(init=False)
    lw: list = field(init=False)
    rw: list = field(init=False)
    agg: list = field(init=False)

    def __post_init__(self):
        n = self.n
        for name in ("left", "right", "par", "wl", "wr", "lw", "rw", "agg"):
            setattr(self, name, [None] * n)
        self.rev = [False] * n


class LinkCutForest:
    """Splay-based link-cut trees (amortized) with a lazy reverse bit.

    Each node keeps the weights of the edges to its predecessor (``wl``) and
    successor (``wr``) on its preferred path; for a path head ``wl`` is the
    edge to the path parent.  ``agg`` folds the edges inside a splay subtree's
    path segment.  ``reversible=False`` drops the reverse bit entirely, which
    is valid as long as :meth:`evert` and the unrooted API are not used.
    """

    def __init__(
        self,
        n: int,
        weight: Monoid | None = None,
        *,
        reversible: bool = True,
        checked: bool = True,
    ):
        self.n = n
        self.weight = weight
        self.reversible = reversible
        self.checked = checked
        self.a = _LctArrays(n)
        self.rotations = 0

    # -- splay tree internals ------------------------------------------

    def _is_root(self, x: int) -> bool:
        p = self.a.par[x]
        return p is None or (self.a.left[p] != x and self.a.right[p] != x)

    def _toggle(self, x: int) -> None:
        a = self.a
        a.left[x], a.right[x] = a.right[x], a.left[x]
        a.wl[x], a.wr[x] = a.wr[x], a.wl[x]
        a.lw[x], a.rw[x] = a.rw[x], a.lw[x]
        a.rev[x] = not a.rev[x]

    def _push(self, x: int) -> None:
        a = self.a
        if a.rev[x]:
            for c in (a.left[x], a.right[x]):
                if c is not None:
                    self._toggle(c)
            a.rev[x] = False

    def _update(self, x: int) -> None:
        if self.weight is None:
            return
        a = self.a
        comb = self.weight.combine
        l, r = a.left[x], a.right[x]
        acc = None
        if l is not None:
            acc = a.agg[l]
            acc = a.wl[x] if acc is None else comb(acc, a.wl[x])
            a.lw[x] = a.lw[l]
        else:
            a.lw[x] = a.wl[x]
        if r is not None:
            acc = a.wr[x] if acc is None else comb(acc, a.wr[x])
            if a.agg[r] is not None:
                acc = comb(acc, a.agg[r])
            a.rw[x] = a.rw[r]
        else:
            a.rw[x] = a.wr[x]
        a.agg[x] = acc

    def _rotate(self, x: int) -> None:
        a = self.a
        p = a.par[x]
        g = a.par[p]
        if not self._is_root(p):
            if a.left[g] == p:
                a.left[g] = x
            else:
                a.right[g] = x
        a.par[x] = g
        if a.left[p] == x:
            b = a.right[x]
            a.left[p] = b
            a.right[x] = p
        else:
            b = a.left[x]
            a.right[p] = b
            a.left[x] = p
        if b is not None:
            a.par[b] = p
        a.par[p] = x
        self._update(p)
        self._update(x)
        self.rotations += 1

    def _splay(self, x: int) -> None:
        a = self.a
        if self.reversible:
            stack = [x]
            y = x
            while not self._is_root(y):
                y = a.par[y]
                stack.append(y)
            for y in reversed(stack):
                self._push(y)
        while not self._is_root(x):
            p = a.par[x]
            if not self._is_root(p):
                g = a.par[p]
                if (a.left[g] == p) == (a.left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, v: int) -> int:
        a = self.a
        last = None
        y = v
        while y is not None:
            self._splay(y)
            a.right[y] = last
            if last is not None:
                a.wr[y] = a.lw[last]
            self._update(y)
            last = y
            y = a.par[y]
        self._splay(v)
        return last

    # -- public operations ---------------------------------------------

    def expose(self, v: int) -> None:
        self._access(v)

    def evert(self, v: int) -> None:
        if not self.reversible:
            raise InvalidOperation("evert needs the reverse bit")
        self._access(v)
        self._toggle(v)

    def find_root(self, v: int) -> int:
        a = self.a
        self._access(v)
        x = v
        while True:
            if self.reversible:
                self._push(x)
            if a.left[x] is None:
                break
            x = a.left[x]
        self._splay(x)
        return x

    def connected(self, u: int, v: int) -> bool:
        return u == v or self.find_root(u) == self.find_root(v)

    def link(self, u: int, v: int, w: Any = None) -> None:
        """Unrooted link: ``u`` becomes a child of ``v`` after everting ``u``."""
        if self.checked and (u == v or self.connected(u, v)):
            raise InvalidOperation(f"link({u}, {v}): already connected")
        self.evert(u)
        a = self.a
        a.wl[u] = w
        self._update(u)
        a.par[u] = v

    def cut(self, u: int, v: int) -> None:
        a = self.a
        self.evert(u)
        self._access(v)
        if a.left[v] != u or a.left[u] is not None or a.right[u] is not None:
            raise InvalidOperation(f"cut({u}, {v}): no such edge")
        a.left[v] = None
        a.par[u] = None
        self._update(v)

    def path_weight(self, u: int, v: int) -> Any:
        if u == v:
            return (self.weight or UNIT).identity
        self.evert(u)
        self._access(v)
        if self.a.par[u] is None:
            return None
        return True if self.weight is None else self.a.agg[v]

    # rooted API, ``u`` must be the root of its tree
    def rooted_link(self, u: int, v: int) -> None:
        if self.checked and (self.find_root(u) != u or self.find_root(v) == u):
            raise InvalidOperation(f"link({u}, {v}): {u} is not a root of another tree")
        self._access(u)
        self.a.par[u] = v

    def rooted_cut(self, v: int) -> None:
        a = self.a
        self._access(v)
        l = a.left[v]
        if l is None:
            raise InvalidOperation(f"cut({v}): {v} is a tree root")
        a.left[v] = None
        a.par[l] = None
        self._update(v)

    def lca(self, u: int, v: int) -> int | None:
        if u == v:
            return u
        if self.find_root(u) != self.find_root(v):
            return None
        self._access(u)
        return self._access(v)
