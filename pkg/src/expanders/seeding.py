"""Reproducible random streams.

All randomness in this package comes from the Philox counter-based 64-bit
generator. Sub-streams are derived from ``(seed, stream index...)`` via
``numpy.random.SeedSequence`` spawn keys, so concurrent trials are
reproducible and order-independent.
"""

from __future__ import annotations

import numpy as np


def substream(seed: int, *key: int) -> np.random.Generator:
    """Generator for sub-stream ``key`` of the given 64-bit seed."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed: int, *key: int) -> int:
    """A 64-bit seed for sub-stream ``key``, usable as an independent seed."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
