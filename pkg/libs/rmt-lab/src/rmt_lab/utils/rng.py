from __future__ import annotations

import numpy as np

__all__ = ["SEED_MAX", "validate_seed", "derive_rng", "derive_seed"]

SEED_MAX: int = 2**64 - 1


def validate_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise TypeError(f"Seed must be an integer, got {type(seed).__name__}")
    if not 0 <= int(seed) <= SEED_MAX:
        raise ValueError(f"Seed must be a 64-bit unsigned integer, got {seed}")

    return int(seed)


def derive_rng(seed: int, worker_id: int | None = None) -> np.random.Generator:
    """Return an independent PCG64 stream for `(seed, worker_id)`.

    Description:
        `worker_id=None` is the root stream of the seed. Worker streams use the
        SeedSequence spawn key, so `(seed, 0)`, `(seed, 1)`, ... never overlap
        with each other or with the root stream.

    """
    seed = validate_seed(seed)
    if worker_id is None:
        seq = np.random.SeedSequence(seed)
    else:
        seq = np.random.SeedSequence(seed, spawn_key=(int(worker_id),))

    return np.random.default_rng(seq)


def derive_seed(seed: int, key: int) -> int:
    """Derive a child 64-bit seed, i.e. for the k-th trajectory of a batch."""
    seq = np.random.SeedSequence(validate_seed(seed), spawn_key=(int(key),))

    return int(seq.generate_state(1, dtype=np.uint64)[0])
