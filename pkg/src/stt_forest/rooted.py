"""Rooted dynamic forests: FindRoot, rooted Link/Cut, LCA and Evert.

Each node may carry ``droot``: the underlying root of its tree if that root
lies in the node's search subtree.  Exactly the nodes on the search-tree
root path of the underlying root have it set.
"""

from __future__ import annotations

from typing import Any

from .core import InvalidOperation, RotationContext, SttForest
from .heuristics import NodeToRoot, get_strategy


class RootedData:
    """``droot`` maintenance under rotations."""

    def __init__(self, n: int):
        self.droot: list[int | None] = list(range(n))

    def on_rotate(self, ctx: RotationContext) -> None:
        d = self.droot
        v, p, c = ctx.v, ctx.p, ctx.c
        dv, dp = d[v], d[p]
        d[v] = dp
        if dp is None or dv is None:
            return  # droot(p) unchanged
        # the root was inside T_v; p keeps it only through c
        d[p] = dp if c is not None and d[c] is not None else None

    def on_attach(self, u: int, v: int, payload: Any) -> None:
        self.droot[u] = None

    def on_detach(self, u: int) -> None:
        pass


class RootedSttForest:
    """Rooted forest over 2-cut search trees, unweighted.

    Example:
        >>> f = RootedSttForest(3)
        >>> f.link(1, 0); f.link(2, 1)
        >>> f.find_root(2), f.lca(1, 2)
        (0, 1)
    """

    def __init__(
        self,
        n: int,
        strategy: str | NodeToRoot = "greedy",
        *,
        checked: bool = True,
        instrumented: bool = False,
    ):
        self.n = n
        self.stt = SttForest(n, checked=checked, instrumented=instrumented)
        self.strategy = get_strategy(strategy)
        self.checked = checked
        self.data = RootedData(n)
        self.stt.listeners.append(self.data)

    @property
    def rotations(self) -> int:
        return self.stt.counter.rotations

    def _ntr(self, v: int) -> None:
        self.strategy.node_to_root(self.stt, v)

    def _nbr(self, v: int) -> None:
        self.strategy.node_below_root(self.stt, v)

    def find_root(self, v: int) -> int:
        self._ntr(v)
        return self.data.droot[v]

    def link(self, u: int, v: int) -> None:
        """Make the tree root ``u`` a child of ``v`` in another tree."""
        self._ntr(u)
        if self.checked:
            if u == v or self.data.droot[u] != u:
                raise InvalidOperation(f"link({u}, {v}): {u} is not a tree root")
        self._ntr(v)
        if self.checked and self.stt.parent[u] is not None:
            raise InvalidOperation(f"link({u}, {v}): already connected")
        self.stt.attach(u, v)

    def parent_of(self, v: int) -> int | None:
        """Underlying parent of ``v``; restructures like any query."""
        droot, stt = self.data.droot, self.stt
        self._ntr(v)
        r = droot[v]
        if r == v:
            return None
        self._nbr(r)
        u = stt.dsep[r]
        if u is None:
            return r
        while (nxt := stt.isep[u]) is not None:
            u = nxt
        return u

    def cut(self, v: int) -> None:
        """Remove the edge between ``v`` and its underlying parent."""
        u = self.parent_of(v)
        if u is None:
            if self.checked:
                raise InvalidOperation(f"cut({v}): {v} is a tree root")
            return
        self._ntr(v)
        self._nbr(u)
        self.stt.detach(u)
        self.data.droot[v] = v

    def lca(self, u: int, v: int) -> int | None:
        """Lowest common ancestor, or ``None`` if ``u`` and ``v`` are in different trees."""
        if u == v:
            self._ntr(v)
            return v
        stt, droot = self.stt, self.data.droot
        self._ntr(v)
        if stt.root_of(u) != v:
            self._ntr(u)
            return None
        self._nbr(u)
        if droot[u] is None:
            return v
        x = stt.dsep[u]
        if x is None or droot[x] is None:
            return u
        dsep, isep = stt.dsep, stt.isep
        while True:
            d, i = dsep[x], isep[x]
            if d is not None and droot[d] is not None:
                x = d
            elif i is not None and droot[i] is not None:
                x = i
            else:
                break
        self._ntr(x)
        return x

    def evert(self, v: int) -> None:
        """Re-root the tree of ``v`` at ``v``."""
        droot, parent = self.data.droot, self.stt.parent
        self._ntr(v)
        r = droot[v]
        if r == v:
            return
        x = r
        while x is not None:
            droot[x] = None
            x = parent[x]
        droot[v] = v
        self._ntr(r)

    def validate(self):
        return self.stt.validate()

    def droot_violation(self, roots: list[int]) -> str | None:
        """Compare ``droot`` against a brute-force recomputation.

        ``roots[x]`` is the underlying root of ``x`` according to an oracle.
        """
        stt = self.stt
        expect: list[int | None] = [None] * self.n
        for x in range(self.n):
            if roots[x] == x:
                y = x
                while y is not None:
                    expect[y] = x
                    y = stt.parent[y]
        for x in range(self.n):
            if expect[x] != self.data.droot[x]:
                return f"droot({x}) = {self.data.droot[x]}, expected {expect[x]}"
        return None
