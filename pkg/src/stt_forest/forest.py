"""Link, Cut and PathWeight on top of a 2-cut search forest.

Two drivers share one class.  The stable driver relies on the strategy
leaving the previous root close to the top on a 1-cut path; the non-stable
driver uses ``node_below_root`` instead and never walks more than one edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import InvalidOperation, SttForest
from .heuristics import NodeToRoot, get_strategy
from .weights import UNIT, Monoid, path_data_for

STABLE_DEPTH = 6


@dataclass
class ForestConfig:
    """Construction options for :class:`SttDynamicForest`."""

    strategy: str = "greedy"
    stable: bool = True
    weight: Monoid | None = None
    checked: bool = True
    instrumented: bool = False
    maintainer: str | None = None


class SttDynamicForest:
    """Unrooted dynamic forest with edge weights from a commutative monoid.

    ``weight=None`` only answers connectivity: path weights are ``True``
    for connected pairs and nothing is stored per node.

    Example:
        >>> f = SttDynamicForest(3, weight=SUM)
        >>> f.link(0, 1, 5); f.link(1, 2, 7)
        >>> f.path_weight(0, 2)
        12
    """

    def __init__(
        self,
        n: int,
        strategy: str | NodeToRoot = "greedy",
        weight: Monoid | None = None,
        *,
        stable: bool = True,
        checked: bool = True,
        instrumented: bool = False,
        maintainer: str | None = None,
        check_stability: bool = False,
    ):
        self.n = n
        self.stt = SttForest(n, checked=checked, instrumented=instrumented)
        self.strategy = get_strategy(strategy)
        self.stable = stable
        self.weight = weight
        self.checked = checked
        self.check_stability = check_stability
        self.data = None
        if weight is not None:
            self.data = path_data_for(weight, n, maintainer)
            self.stt.listeners.append(self.data)

    @classmethod
    def from_config(cls, n: int, cfg: ForestConfig) -> "SttDynamicForest":
        return cls(
            n,
            cfg.strategy,
            cfg.weight,
            stable=cfg.stable,
            checked=cfg.checked,
            instrumented=cfg.instrumented,
            maintainer=cfg.maintainer,
        )

    @property
    def rotations(self) -> int:
        return self.stt.counter.rotations

    @property
    def identity(self) -> Any:
        return (self.weight or UNIT).identity

    def _check_node(self, *nodes: int) -> None:
        for x in nodes:
            if not 0 <= x < self.n:
                raise IndexError(f"node {x} out of range [0, {self.n})")

    # ------------------------------------------------------------------

    def node_to_root(self, v: int) -> None:
        """Bring ``v`` to the root, checking stability when asked to."""
        if not self.check_stability:
            self.strategy.node_to_root(self.stt, v)
            return
        old = self.stt.root_of(v)
        self.strategy.node_to_root(self.stt, v)
        problem = stability_violation(self.stt, old)
        if problem:
            raise AssertionError(f"node_to_root({v}) is not stable: {problem}")

    def _below_root(self, u: int, v: int) -> bool:
        """With ``v`` an STT root, move ``u`` directly below it if they share a tree."""
        if self.stt.root_of(u) != v:
            # pay for the walk so amortized bounds still hold
            self.strategy.node_to_root(self.stt, u)
            return False
        self.strategy.node_below_root(self.stt, u)
        return True

    def connected(self, u: int, v: int) -> bool:
        return self.path_weight(u, v) is not None

    def link(self, u: int, v: int, w: Any = None) -> None:
        """Add the edge {u, v} with weight ``w``; u and v must be in different trees."""
        if self.checked:
            self._check_node(u, v)
            if u == v:
                raise InvalidOperation(f"link({u}, {v}) would create a loop")
        self.node_to_root(u)
        self.node_to_root(v)
        if self.checked and self.stt.parent[u] is not None:
            raise InvalidOperation(f"link({u}, {v}): already connected")
        self.stt.attach(u, v, w)

    def cut(self, u: int, v: int) -> None:
        """Remove the edge {u, v}, which must exist."""
        stt = self.stt
        if self.checked:
            self._check_node(u, v)
            if u == v:
                raise InvalidOperation(f"cut({u}, {v}): no such edge")
        if self.stable:
            self.node_to_root(u)
            self.node_to_root(v)
        else:
            self.node_to_root(v)
            if not self._below_root(u, v):
                raise InvalidOperation(f"cut({u}, {v}): not connected")
        if self.checked:
            if stt.parent[u] != v or stt.dsep[u] is not None:
                raise InvalidOperation(f"cut({u}, {v}): no such edge")
            if stt.shadow is not None and v not in stt.shadow[u]:
                raise InvalidOperation(f"cut({u}, {v}): no such edge")
        stt.detach(u)

    def path_weight(self, u: int, v: int) -> Any:
        """Combined weight of the u-v path, or ``None`` if disconnected."""
        if self.checked:
            self._check_node(u, v)
        if u == v:
            return self.identity
        stt = self.stt
        parent = stt.parent
        if not self.stable:
            self.node_to_root(v)
            if not self._below_root(u, v):
                return None
            return True if self.data is None else self.data.pdist[u]
        self.node_to_root(u)
        self.node_to_root(v)
        if self.data is None:
            x, hops = u, 0
            while x != v and x is not None and hops <= STABLE_DEPTH:
                x = parent[x]
                hops += 1
            return True if x == v else None
        pdist = self.data.pdist
        combine = self.weight.combine
        acc = pdist[u]
        x = parent[u]
        hops = 1
        while x != v:
            if x is None or hops > STABLE_DEPTH:
                return None
            acc = combine(acc, pdist[x])
            x = parent[x]
            hops += 1
        return acc

    def underlying_edges(self) -> set[tuple[int, int]]:
        return self.stt.underlying_edges()

    def validate(self):
        return self.stt.validate()


def stability_violation(stt: SttForest, r: int) -> str | None:
    """Check that ``r`` is shallow and every node on its root path is 1-cut."""
    x, depth = r, 0
    while x is not None:
        if stt.is_separator(x):
            return f"node {x} on the root path of {r} is a separator"
        x = stt.parent[x]
        depth += 1
    if depth - 1 > STABLE_DEPTH:
        return f"previous root {r} ended at depth {depth - 1}"
    return None
