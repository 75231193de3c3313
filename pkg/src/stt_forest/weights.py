"""Edge-weight algebras and the per-node distance annotations kept under rotations.

``pdist(v)`` is the distance from ``v`` to its search-tree parent, ``adist(v)``
the distance to the other boundary node of a separator.  An absent
annotation (``None``) stands for infinity: roots have no ``pdist`` and 1-cut
nodes no ``adist``.
"""

from __future__ import annotations

from typing import Any, Hashable, NamedTuple

from .core import RotationContext


class Monoid:
    """Commutative monoid: an ``identity`` and an associative ``combine``."""

    identity: Any = None

    def combine(self, a, b):
        raise NotImplementedError


class Group(Monoid):
    def inverse(self, a):
        raise NotImplementedError


class UnitMonoid(Monoid):
    """The one-element monoid; path weights only report connectivity."""

    identity = True

    def combine(self, a, b):
        return True

    def __repr__(self) -> str:
        return "UnitMonoid()"


class SumGroup(Group):
    identity = 0

    def combine(self, a, b):
        return a + b

    def inverse(self, a):
        return -a

    def __repr__(self) -> str:
        return "SumGroup()"


class MaxEdge(NamedTuple):
    weight: int
    witness: Hashable | None = None


class MaxEdgeMonoid(Monoid):
    """(N, max) extended with a heaviest-edge witness.

    Ties keep the left operand, so results are deterministic for a fixed
    combination order.
    """

    identity = MaxEdge(0, None)

    def combine(self, a: MaxEdge, b: MaxEdge) -> MaxEdge:
        return a if a.weight >= b.weight else b

    def __repr__(self) -> str:
        return "MaxEdgeMonoid()"


UNIT = UnitMonoid()
SUM = SumGroup()
MAX_EDGE = MaxEdgeMonoid()


def fold(monoid: Monoid, values) -> Any:
    """Combine ``values`` left to right; the identity for an empty sequence."""
    acc = None
    for x in values:
        acc = x if acc is None else monoid.combine(acc, x)
    return monoid.identity if acc is None else acc


class GroupPathData:
    """``pdist`` maintenance for group weights, using subtraction."""

    def __init__(self, group: Group, n: int):
        self.group = group
        self.pdist: list[Any] = [None] * n

    def on_rotate(self, ctx: RotationContext) -> None:
        pd = self.pdist
        add, neg = self.group.combine, self.group.inverse
        v, p, c = ctx.v, ctx.p, ctx.c
        pv, pp = pd[v], pd[p]
        if c is not None:
            pd[c] = add(pv, neg(pd[c]))
        pd[p] = pv
        if ctx.g is None:
            pd[v] = None
        elif ctx.v_was_direct_separator:
            pd[v] = add(pp, neg(pv))
        else:
            pd[v] = add(pv, pp)

    def on_attach(self, u: int, v: int, w: Any) -> None:
        self.pdist[u] = w

    def on_detach(self, u: int) -> None:
        self.pdist[u] = None


class MonoidPathData:
    """``pdist``/``adist`` maintenance for weights without inverses."""

    def __init__(self, monoid: Monoid, n: int):
        self.monoid = monoid
        self.pdist: list[Any] = [None] * n
        self.adist: list[Any] = [None] * n

    def on_rotate(self, ctx: RotationContext) -> None:
        pd, ad = self.pdist, self.adist
        add = self.monoid.combine
        v, p, c = ctx.v, ctx.p, ctx.c
        pv, pp, av, ap = pd[v], pd[p], ad[v], ad[p]
        if c is not None:
            # c trades parent and grandparent; both stay on its boundary
            pd[c], ad[c] = ad[c], pd[c]
        pd[p] = pv
        if ctx.g is None:
            pd[v] = ad[v] = ad[p] = None
        elif ctx.v_was_direct_separator:
            pd[v] = av
            if ctx.p_was_separator:
                ad[v] = add(pv, ap)
            else:
                ad[v] = ad[p] = None
        else:
            pd[v] = add(pv, pp)
            ad[p] = pp
            ad[v] = av if ctx.p_was_separator else None

    def on_attach(self, u: int, v: int, w: Any) -> None:
        self.pdist[u] = w
        self.adist[u] = None

    def on_detach(self, u: int) -> None:
        self.pdist[u] = None
        self.adist[u] = None


def path_data_for(weight: Monoid, n: int, maintainer: str | None = None):
    """Pick the annotation maintainer: subtraction for groups unless told otherwise."""
    if maintainer is None:
        maintainer = "group" if isinstance(weight, Group) else "monoid"
    if maintainer == "group":
        if not isinstance(weight, Group):
            raise TypeError(f"{weight!r} has no inverse")
        return GroupPathData(weight, n)
    if maintainer == "monoid":
        return MonoidPathData(weight, n)
    raise ValueError(f"unknown maintainer {maintainer!r}")
