"""
Pinned random number generator contract.

All sampled quantities are driven by numpy's counter-based Philox generator,
seeded with an explicit 64-bit value.
"""

import numpy as np

RNG_ID = "numpy-philox4x64-v1"

_SEED_MASK = (1 << 64) - 1


def normalize_seed(seed: int) -> int:
    """Reduce an arbitrary integer to an unsigned 64-bit seed"""
    return int(seed) & _SEED_MASK


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(normalize_seed(seed)))
