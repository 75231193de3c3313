"""Strategies that bring a node to the root of its search tree by legal rotations.

Every strategy is written against a ``top`` node: the climb stops once the
node's parent is ``top``.  ``top=None`` is NodeToRoot; ``top`` = the current
root is NodeBelowRoot, which then never rotates the root itself.
"""

from __future__ import annotations

from .core import InvalidOperation, SttForest


def _is_sep(f: SttForest, v: int) -> bool:
    p = f.parent[v]
    return p is not None and (f.dsep[p] == v or f.isep[p] == v)


def can_splay_step(f: SttForest, v: int, top: int | None = None) -> bool:
    """Whether ``splay_step(v)`` keeps the forest 2-cut."""
    p = f.parent[v]
    if p is None or p == top:
        raise InvalidOperation(f"splay step at {v} needs a parent below the top")
    g = f.parent[p]
    if g == top:
        return True
    if not _is_sep(f, g):
        return True
    return f.is_separator_hint(v, p) and f.is_separator_hint(p, g)


def splay_step(f: SttForest, v: int, top: int | None = None) -> None:
    """ZIG, ZIG-ZAG or ZIG-ZIG at ``v``; never rotates ``top``.

    ZIG-ZAG (two rotations at ``v``) applies when ``v`` is a direct separator,
    i.e. ``v`` lies between its parent and grandparent.
    """
    if f.checked and not can_splay_step(f, v, top):
        raise InvalidOperation(f"splay step at {v} violates the 2-cut property")
    p = f.parent[v]
    f.counter.splay_steps += 1
    if f.parent[p] == top:
        f.rotate(v)
    elif f.dsep[p] == v:
        # v lies between p and g on the underlying path
        f.rotate(v)
        f.rotate(v)
    else:
        f.rotate(p)
        f.rotate(v)


def splay_to(f: SttForest, x: int, y: int, top: int | None = None) -> None:
    """Splay ``x`` until it is a child of its ancestor ``y``."""
    parent = f.parent
    if f.checked:
        a = parent[x]
        while a is not None and a != y:
            a = parent[a]
        if a is None:
            raise InvalidOperation(f"{y} is not a proper ancestor of {x}")
    while parent[x] != y and parent[parent[x]] != y:
        splay_step(f, x, top)
    if parent[x] != y:
        f.rotate(x)


class NodeToRoot:
    """Base strategy.  Subclasses implement :meth:`climb`."""

    name = "base"
    stable = True

    def node_to_root(self, f: SttForest, v: int) -> None:
        self.climb(f, v, None)

    def node_below_root(self, f: SttForest, v: int) -> None:
        r = f.root_of(v)
        if r == v:
            raise InvalidOperation(f"{v} is the root of its search tree")
        self.climb(f, v, r)

    def climb(self, f: SttForest, v: int, top: int | None) -> None:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class MoveToRoot(NodeToRoot):
    """Rotate at ``v``, or at its parent when the rotation at ``v`` is illegal."""

    name = "mtr"

    def climb(self, f, v, top):
        parent, dsep, isep = f.parent, f.dsep, f.isep
        rotate = f.rotate
        while (p := parent[v]) != top:
            if dsep[p] == v or isep[p] == v:
                rotate(v)
                continue
            g = parent[p]
            if g is not None and (dsep[g] == p or isep[g] == p):
                rotate(p)
            else:
                rotate(v)


class GreedySplay(NodeToRoot):
    """Splay step at the first of ``v``, its parent, its grandparent that allows one."""

    name = "greedy"

    def climb(self, f, v, top):
        parent = f.parent
        while (p := parent[v]) != top:
            g = parent[p]
            if g == top:
                f.rotate(v)
            elif can_splay_step(f, v, top):
                splay_step(f, v, top)
            elif can_splay_step(f, p, top):
                splay_step(f, p, top)
            else:
                splay_step(f, g, top)


class TwoPassSplay(NodeToRoot):
    """First splay the branching nodes on the path together, then splay ``v``."""

    name = "2p"

    def climb(self, f, v, top):
        parent = f.parent
        branching = []
        x = v
        while (p := parent[x]) != top:
            if not f.is_separator_hint(x, p) and _is_sep(f, p):
                branching.append(p)
            x = p
        if branching:
            splay_to(f, v, branching[0], top)
            for lo, hi in zip(branching, branching[1:]):
                splay_to(f, lo, hi, top)
            last = branching[-1]
            while parent[last] != top:
                splay_step(f, last, top)
        while parent[v] != top:
            splay_step(f, v, top)


class LocalTwoPassSplay(NodeToRoot):
    """Both passes of :class:`TwoPassSplay` interleaved in one bottom-up sweep."""

    name = "l2p"

    def climb(self, f, v, top):
        parent = f.parent
        while (p := parent[v]) != top:
            g = parent[p]
            if g == top:
                f.rotate(v)
            elif can_splay_step(f, v, top):
                splay_step(f, v, top)
            elif f.is_separator_hint(p, g):
                # p is branching; p and g are both separators, so this is legal
                splay_step(f, p, top)
            elif can_splay_step(f, g, top):
                splay_step(f, g, top)
            else:
                f.rotate(g)


STRATEGIES: dict[str, type[NodeToRoot]] = {
    cls.name: cls for cls in (MoveToRoot, GreedySplay, TwoPassSplay, LocalTwoPassSplay)
}


def get_strategy(name: str | NodeToRoot) -> NodeToRoot:
    if isinstance(name, NodeToRoot):
        return name
    try:
        return STRATEGIES[name]()
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}; choose from {sorted(STRATEGIES)}") from None
