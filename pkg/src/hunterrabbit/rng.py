"""Deterministic random-stream derivation.

Every randomized operation in this package derives its generators from a user
seed through one rule:

    stream(seed, *key) == Generator(PCG64(SeedSequence(seed, spawn_key=key)))

Keys are small tuples of non-negative integers naming the consumer, e.g.
``(STREAM_HUNTER,)`` for the hunter side of a game or
``(STREAM_TRIALS, chunk_index)`` for a block of Monte Carlo trials.  Results
are therefore pure functions of ``(inputs, seed)`` and do not depend on how
work is batched or scheduled.
"""

from __future__ import annotations

import numpy as np

STREAM_HUNTER = 0
STREAM_RABBIT = 1
STREAM_TRIALS = 2
STREAM_PATH = 3
STREAM_MC = 4

DEFAULT_SEED = 1729


def stream(seed: int, *key: int) -> np.random.Generator:
    """Return the generator for the sub-stream named by ``key``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(ss))


def child_seed(seed: int, *key: int) -> int:
    """A derived integer seed, for passing into nested seeded operations."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0] >> 1)
