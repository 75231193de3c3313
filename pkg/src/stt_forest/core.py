"""Two-cut search trees on trees with a constant-time rotation primitive.

A search forest over ``n`` fixed nodes is stored as three parallel lists:
``parent``, ``dsep`` (the unique direct separator child) and ``isep`` (the
unique indirect separator child).  Together they determine the underlying
forest, which is never stored except in instrumented mode, where a shadow
adjacency copy backs the validators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Protocol


class InvalidOperation(ValueError):
    """An operation was called with a violated precondition (checked mode)."""


@dataclass(frozen=True, slots=True)
class RotationContext:
    """Pre-rotation snapshot handed to listeners of a rotation at ``v``."""

    v: int
    p: int
    g: int | None
    c: int | None
    v_was_direct_separator: bool
    p_was_separator: bool


class RotationListener(Protocol):
    def on_rotate(self, ctx: RotationContext) -> None: ...

    def on_attach(self, u: int, v: int, payload: Any) -> None: ...

    def on_detach(self, u: int) -> None: ...


@dataclass
class RotationCounter:
    rotations: int = 0
    splay_steps: int = 0


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"
    node: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class SttForest:
    """A forest of 2-cut search trees over the nodes ``0 .. n-1``.

    ``checked`` turns precondition violations into :class:`InvalidOperation`;
    with ``checked=False`` they are undefined behaviour.  ``instrumented``
    keeps a shadow copy of the underlying edges for :meth:`validate`.
    """

    def __init__(self, n: int, *, checked: bool = True, instrumented: bool = False):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        self.parent: list[int | None] = [None] * n
        self.dsep: list[int | None] = [None] * n
        self.isep: list[int | None] = [None] * n
        self.listeners: list[RotationListener] = []
        self.counter = RotationCounter()
        self.checked = checked
        self.shadow: list[set[int]] | None = (
            [set() for _ in range(n)] if instrumented else None
        )

    @classmethod
    def from_structure(
        cls,
        n: int,
        parent: list[int | None],
        edges: Iterable[tuple[int, int]],
        *,
        checked: bool = True,
        instrumented: bool = True,
    ) -> "SttForest":
        """Build a forest from explicit parent pointers and underlying edges.

        Separator designators are derived by brute force; raises ``ValueError``
        if ``parent`` is not a 2-cut search forest on ``edges``.
        """
        f = cls(n, checked=checked, instrumented=True)
        f.parent = list(parent)
        for a, b in edges:
            f.shadow[a].add(b)
            f.shadow[b].add(a)
        order, _ = f._topdown()
        if len(order) != n:
            raise ValueError("parent pointers contain a cycle")
        tin, tout = f._euler(order)
        bnd = f._brute_boundaries(order, tin, tout, f.shadow)
        if isinstance(bnd, ValidationReport):
            raise ValueError(bnd.message)
        for v in range(n):
            p = f.parent[v]
            if p is not None and len(bnd[v]) == 2:
                if bnd[v] == {p, f.parent[p]}:
                    f.dsep[p] = v
                else:
                    f.isep[p] = v
        report = f.validate()
        if not report:
            raise ValueError(report.message)
        if not instrumented:
            f.shadow = None
        return f

    def copy(self) -> "SttForest":
        """Structural copy without listeners."""
        f = SttForest(self.n, checked=self.checked)
        f.parent = self.parent[:]
        f.dsep = self.dsep[:]
        f.isep = self.isep[:]
        if self.shadow is not None:
            f.shadow = [set(s) for s in self.shadow]
        return f

    # ------------------------------------------------------------------
    # local predicates

    def root_of(self, v: int) -> int:
        parent = self.parent
        while (p := parent[v]) is not None:
            v = p
        return v

    def depth(self, v: int) -> int:
        d = 0
        parent = self.parent
        while (v := parent[v]) is not None:
            d += 1
        return d

    def is_separator(self, v: int) -> bool:
        p = self.parent[v]
        return p is not None and (self.dsep[p] == v or self.isep[p] == v)

    def is_separator_hint(self, v: int, p: int) -> bool:
        # p must be parent(v)
        return self.dsep[p] == v or self.isep[p] == v

    def is_direct_separator(self, v: int) -> bool:
        p = self.parent[v]
        return p is not None and self.dsep[p] == v

    def is_indirect_separator(self, v: int) -> bool:
        p = self.parent[v]
        return p is not None and self.isep[p] == v

    def can_rotate(self, v: int) -> bool:
        """Whether rotating ``v`` with its parent keeps the forest 2-cut."""
        p = self.parent[v]
        if p is None:
            raise InvalidOperation(f"node {v} is a root and cannot be rotated")
        if self.dsep[p] == v or self.isep[p] == v:
            return True
        g = self.parent[p]
        return g is None or (self.dsep[g] != p and self.isep[g] != p)

    # ------------------------------------------------------------------
    # mutation

    def rotate(self, v: int) -> None:
        """Rotate ``v`` with its parent in O(1), updating all designators."""
        parent, dsep, isep = self.parent, self.dsep, self.isep
        p = parent[v]
        if self.checked and (p is None or not self.can_rotate(v)):
            raise InvalidOperation(f"rotation at {v} violates the 2-cut property")
        g = parent[p]
        c = dsep[v]
        if g is None:
            v_direct = p_sep = False
        else:
            v_direct = dsep[p] == v
            p_sep = dsep[g] == p or isep[g] == p
        if self.listeners:
            ctx = RotationContext(v, p, g, c, v_direct, p_sep)
            for listener in self.listeners:
                listener.on_rotate(ctx)

        dp, ip = dsep[p], isep[p]
        if dp == v:
            other = ip
        elif ip == v:
            other = dp
        else:
            other = dp if dp is not None else ip

        if g is None:
            dsep[v] = isep[v] = None
        else:
            if dsep[g] == p:
                dsep[g] = v
            elif isep[g] == p:
                isep[g] = v
            if v_direct:
                dsep[v] = isep[v]
                isep[v] = p if p_sep else None
            else:
                dsep[v] = p
        dsep[p] = c
        isep[p] = other
        if c is not None:
            parent[c] = p
            dsep[c], isep[c] = isep[c], dsep[c]
        parent[v] = g
        parent[p] = v
        self.counter.rotations += 1

    def attach(self, u: int, v: int, payload: Any = None) -> None:
        """Make root ``u`` a child of root ``v``, adding the edge {u, v}."""
        if self.checked:
            if u == v or self.parent[u] is not None or self.parent[v] is not None:
                raise InvalidOperation(f"attach({u}, {v}) needs two distinct roots")
        self.parent[u] = v
        if self.shadow is not None:
            self.shadow[u].add(v)
            self.shadow[v].add(u)
        for listener in self.listeners:
            listener.on_attach(u, v, payload)

    def detach(self, u: int) -> None:
        """Remove the edge between ``u`` and its parent, a root adjacent to ``u``."""
        p = self.parent[u]
        if self.checked:
            if p is None or self.parent[p] is not None or self.dsep[u] is not None:
                raise InvalidOperation(f"{u} is not a child of a root adjacent to it")
        for listener in self.listeners:
            listener.on_detach(u)
        self.parent[u] = None
        if self.shadow is not None:
            self.shadow[u].discard(p)
            self.shadow[p].discard(u)

    # ------------------------------------------------------------------
    # reconstruction and validation (O(n), test support)

    def _topdown(self) -> tuple[list[int], list[list[int]]]:
        children: list[list[int]] = [[] for _ in range(self.n)]
        roots = []
        for v, p in enumerate(self.parent):
            if p is None:
                roots.append(v)
            else:
                children[p].append(v)
        order = []
        queue = deque(roots)
        while queue:
            v = queue.popleft()
            order.append(v)
            queue.extend(children[v])
        return order, children

    def designated_boundaries(self) -> list[tuple[int, ...]]:
        """Subtree boundaries as implied by the designators, computed top-down."""
        order, _ = self._topdown()
        parent, dsep, isep = self.parent, self.dsep, self.isep
        bnd: list[tuple[int, ...]] = [()] * self.n
        for v in order:
            p = parent[v]
            if p is None:
                continue
            if dsep[p] == v:
                g = parent[p]
                if g is None:
                    raise ValueError(f"direct separator {v} has no grandparent")
                bnd[v] = (p, g)
            elif isep[p] == v:
                rest = [x for x in bnd[p] if x != parent[p]]
                if len(rest) != 1:
                    raise ValueError(f"indirect separator {v} under 1-cut parent {p}")
                bnd[v] = (p, rest[0])
            else:
                bnd[v] = (p,)
        return bnd

    def underlying_edges(self) -> set[tuple[int, int]]:
        """Reconstruct the underlying forest from the designators alone."""
        bnd = self.designated_boundaries()
        _, children = self._topdown()
        edges = set()
        for v in range(self.n):
            below = set()
            for c in children[v]:
                below.update(bnd[c])
            for u in bnd[v]:
                if u not in below:
                    edges.add(_edge(u, v))
        return edges

    def _adjacency(self) -> list[set[int]]:
        if self.shadow is not None:
            return self.shadow
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.underlying_edges():
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def compute_boundary(self, v: int) -> set[int]:
        """Brute-force boundary of the subtree rooted at ``v``."""
        adj = self._adjacency()
        _, children = self._topdown()
        inside = set()
        stack = [v]
        while stack:
            x = stack.pop()
            inside.add(x)
            stack.extend(children[x])
        return {y for x in inside for y in adj[x] if y not in inside}

    def _euler(self, order: list[int]) -> tuple[list[int], list[int]]:
        # subtree sizes give preorder intervals without recursion
        n = self.n
        size = [1] * n
        for v in reversed(order):
            p = self.parent[v]
            if p is not None:
                size[p] += size[v]
        tin = [0] * n
        nxt = [0] * n
        clock = 0
        for v in order:
            p = self.parent[v]
            if p is None:
                tin[v] = clock
                clock += size[v]
            else:
                tin[v] = nxt[p]
            nxt[v] = tin[v] + 1
            if p is not None:
                nxt[p] += size[v]
        tout = [tin[v] + size[v] for v in range(n)]
        return tin, tout

    def _brute_boundaries(self, order, tin, tout, adj):
        parent = self.parent
        bnd: list[set[int] | None] = [None] * self.n
        for v in reversed(order):
            lo, hi = tin[v], tout[v]
            bnd[v] = {y for y in adj[v] if not lo <= tin[y] < hi}
        # children come after parents in order, so this folds bottom-up
        for v in reversed(order):
            p = parent[v]
            if len(bnd[v]) > 2:
                return ValidationReport(False, f"node {v} is not 2-cut: {sorted(bnd[v])}", v)
            if p is not None:
                lo, hi = tin[p], tout[p]
                bnd[p].update(y for y in bnd[v] if not lo <= tin[y] < hi)
        return bnd

    def validate(self) -> ValidationReport:
        """Check structure, search-tree properties, 2-cut bound and designators."""
        n = self.n
        parent, dsep, isep = self.parent, self.dsep, self.isep
        for v in range(n):
            p = parent[v]
            if p is not None and not 0 <= p < n:
                return ValidationReport(False, f"parent of {v} out of range", v)
        order, children = self._topdown()
        if len(order) != n:
            return ValidationReport(False, "parent pointers contain a cycle")
        for v in range(n):
            for c, kind in ((dsep[v], "dsep"), (isep[v], "isep")):
                if c is not None and parent[c] != v:
                    return ValidationReport(False, f"{kind} child {c} of {v} is not its child", v)
            if dsep[v] is not None and dsep[v] == isep[v]:
                return ValidationReport(False, f"dsep and isep of {v} coincide", v)

        if self.shadow is not None:
            try:
                rebuilt = self.underlying_edges()
            except ValueError as exc:
                return ValidationReport(False, f"designators inconsistent: {exc}")
            truth = {_edge(a, b) for a in range(n) for b in self.shadow[a]}
            if rebuilt != truth:
                return ValidationReport(
                    False, f"reconstructed edges differ: {sorted(rebuilt ^ truth)[:4]}"
                )
        try:
            adj = self._adjacency()
        except ValueError as exc:
            return ValidationReport(False, f"designators inconsistent: {exc}")

        tin, tout = self._euler(order)
        # (i) every edge joins an ancestor and a descendant
        inner = [0] * n
        for a in range(n):
            for b in adj[a]:
                if a < b:
                    if tin[a] <= tin[b] < tout[a]:
                        inner[a] += 1
                    elif tin[b] <= tin[a] < tout[b]:
                        inner[b] += 1
                    else:
                        return ValidationReport(False, f"edge {a}-{b} is not ancestral", a)
        # (ii) induced subtrees are connected: a forest with |T_v| - 1 edges
        for v in reversed(order):
            p = parent[v]
            if p is not None:
                inner[p] += inner[v]
            if inner[v] != tout[v] - tin[v] - 1:
                return ValidationReport(False, f"subtree of {v} is disconnected", v)

        bnd = self._brute_boundaries(order, tin, tout, adj)
        if isinstance(bnd, ValidationReport):
            return bnd
        for v in range(n):
            p = parent[v]
            if p is None:
                if bnd[v]:
                    return ValidationReport(False, f"root {v} has a boundary", v)
                continue
            b = bnd[v]
            direct = len(b) == 2 and b == {p, parent[p]}
            indirect = len(b) == 2 and not direct
            if direct != (dsep[p] == v) or indirect != (isep[p] == v):
                return ValidationReport(False, f"designator mismatch at {v} (boundary {sorted(b)})", v)
        return ValidationReport(True)
