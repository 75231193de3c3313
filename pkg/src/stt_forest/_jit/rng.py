"""SplitMix64 on a one-element uint64 state array."""

from __future__ import annotations

import numpy as np
from numba import njit

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
TWO_NEG53 = 1.0 / 9007199254740992.0


def new_state(seed: int) -> np.ndarray:
    return np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)


@njit(cache=True)
def next_u64(state):
    state[0] += GOLDEN
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def randbelow(state, k):
    return np.int64(next_u64(state) % np.uint64(k))


@njit(cache=True)
def random(state):
    return np.float64(next_u64(state) >> np.uint64(11)) * TWO_NEG53


@njit(cache=True)
def normal(state):
    # Box-Muller, cosine branch only; 1 - u avoids log(0)
    u1 = random(state)
    u2 = random(state)
    return np.sqrt(-2.0 * np.log(1.0 - u1)) * np.cos(2.0 * np.pi * u2)
