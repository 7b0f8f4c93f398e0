"""Deterministic seed derivation for parallel replication.

Replicate i of a run seeded with ``master_seed`` always uses
``mix64(master_seed, i)``, no matter how replicates are distributed over
workers.  The mixer is the splitmix64 output finalizer (Steele, Lea &
Flood; also used by Vigna's xoshiro seeding), a published 64-bit
avalanche-complete permutation, so independent implementations can
reproduce the exact streams.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(master_seed: int, index: int) -> int:
    """Derive the 64-bit sub-seed for stream ``index`` of ``master_seed``."""
    z = (int(master_seed) + (int(index) + 1) * _GOLDEN_GAMMA) & _MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z


def replicate_rng(master_seed: int, index: int) -> np.random.Generator:
    """Generator for replicate ``index``, a pure function of its arguments."""
    return np.random.default_rng(mix64(master_seed, index))
