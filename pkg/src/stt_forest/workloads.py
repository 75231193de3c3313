"""Seed-deterministic query scripts.

A script is an ``(m, 4)`` int64 array of rows ``(opcode, a, b, w)``.  All
randomness comes from SplitMix64 (see the README), so a script depends only
on the generator, its parameters and the seed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ._jit import gen
from ._jit.common import CUT, EVERT, FINDROOT, LCA, LINK, PATH, RCUT, RLINK
from ._jit.rng import new_state

OP_NAMES = {
    LINK: "link",
    CUT: "cut",
    PATH: "path",
    RLINK: "rlink",
    RCUT: "rcut",
    LCA: "lca",
    EVERT: "evert",
    FINDROOT: "findroot",
}
ROOTED_OPS = frozenset({RLINK, RCUT, LCA, EVERT, FINDROOT})
UNROOTED_OPS = frozenset({LINK, CUT, PATH})

_MASK = (1 << 64) - 1


class SplitMix64:
    """Pure-Python twin of the compiled generator.

    >>> SplitMix64(0).next_u64()
    16294208416658607535
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randbelow(self, k: int) -> int:
        return self.next_u64() % k

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


@dataclass
class QueryScript:
    """A replayable operation sequence over ``n`` vertices."""

    n: int
    ops: np.ndarray
    name: str = "custom"
    params: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return int(self.ops.shape[0])

    @property
    def rooted(self) -> bool:
        codes = set(np.unique(self.ops[:, 0]).tolist())
        return bool(codes & ROOTED_OPS)

    def mix(self) -> dict[str, float]:
        """Fraction of each operation kind."""
        counts = Counter(self.ops[:, 0].tolist())
        m = max(len(self), 1)
        return {OP_NAMES[k]: counts[k] / m for k in sorted(counts)}

    def rows(self):
        for op, a, b, w in self.ops.tolist():
            yield op, a, b, w


def gen_urc(n: int, m: int, seed: int, p_path: float = 0.5) -> QueryScript:
    """Uniformly random connectivity queries."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0.0 <= p_path <= 1.0:
        raise ValueError("p_path must lie in [0, 1]")
    ops = gen.gen_urc(n, m, float(p_path), new_state(seed))
    return QueryScript(n, ops, "urc", {"m": m, "seed": seed, "p_path": p_path})


def gen_degenerate(n: int, sigma: float = 0.0, seed: int = 0) -> QueryScript:
    """Path of ``n`` nodes, then queries from (noisily) sliding ``j`` to ``n - 1``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    ops = gen.gen_degenerate(n, float(sigma), new_state(seed))
    name = "degenerate" if sigma == 0 else "noisy"
    return QueryScript(n, ops, name, {"sigma": sigma, "seed": seed})


def gen_lca(
    n: int,
    m: int | None = None,
    seed: int = 0,
    with_evert: bool = False,
    p_find_root: float = 0.0,
) -> QueryScript:
    """Rooted links, cuts and LCA queries; ``m`` defaults to ``10 n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    m = 10 * n if m is None else m
    ops = gen.gen_lca(n, m, bool(with_evert), float(p_find_root), new_state(seed))
    name = "lca-evert" if with_evert else "lca"
    return QueryScript(
        n, ops, name, {"m": m, "seed": seed, "evert": with_evert, "p_find_root": p_find_root}
    )


WORKLOADS = {
    "urc": "uniformly random link/cut/path queries",
    "degenerate": "sequential path queries on a long path",
    "noisy": "degenerate with normally distributed index noise",
    "lca": "rooted link/cut/lca mix",
    "lca-evert": "rooted mix with everts",
}


def fnv1a(values) -> int:
    """Checksum of a sequence of int64 results, as computed by the kernels."""
    h = 1469598103934665603
    for x in values:
        x &= _MASK
        for _ in range(8):
            h ^= x & 0xFF
            h = (h * 1099511628211) & _MASK
            x >>= 8
    return h
