"""Random set-function generators (deterministic given a seed)."""

from __future__ import annotations

from typing import Union

import numpy as np

from .setfunction import Capacity, SetFunction, SignedCapacity

SeedLike = Union[int, np.random.Generator]


def _as_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_set_function(n: int, seed: SeedLike = 0) -> SetFunction:
    """Arbitrary set function with i.i.d. uniform values on [-1, 1]."""
    rng = _as_rng(seed)
    return SetFunction(n, rng.uniform(-1.0, 1.0, 1 << n))


def random_signed_capacity(n: int, seed: SeedLike = 0) -> SignedCapacity:
    """Game with i.i.d. uniform values on [-1, 1] and v(empty) = 0."""
    rng = _as_rng(seed)
    values = rng.uniform(-1.0, 1.0, 1 << n)
    values[0] = 0.0
    return SignedCapacity(n, values)


def random_capacity(n: int, seed: SeedLike = 0) -> Capacity:
    """Monotone capacity built by cumulative maxima along the lattice.

    Each subset receives the maximum over its covered subsets plus a
    nonnegative increment, which guarantees every covering pair is
    nondecreasing.  Masks are visited in ascending order; clearing a bit
    always gives a smaller mask, so covered subsets are already assigned.
    """
    rng = _as_rng(seed)
    size = 1 << n
    increments = rng.uniform(0.0, 1.0, size)
    values = np.zeros(size)
    for mask in range(1, size):
        best = 0.0
        rest = mask
        while rest:
            bit = rest & -rest
            best = max(best, values[mask ^ bit])
            rest ^= bit
        values[mask] = best + increments[mask]
    return Capacity(n, values)


def random_normalized_capacity(n: int, seed: SeedLike = 0) -> Capacity:
    """Monotone capacity rescaled so the full set is worth exactly 1."""
    rng = _as_rng(seed)
    while True:
        capacity = random_capacity(n, rng)
        top = capacity.values[-1]
        if top > 0.0:
            return Capacity(n, capacity.values / top)
