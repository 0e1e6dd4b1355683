from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class IndexSample:
    """Bernoulli index sample: each index of [0, universe) kept w.p. rate_numerator/universe"""
    universe: int
    rate_numerator: int
    indices: np.ndarray
    seed: int

    @property
    def size(self) -> int:
        return int(self.indices.size)

    @property
    def rate(self) -> float:
        return self.rate_numerator / self.universe

    def __len__(self):
        return self.size

    def __eq__(self, other):
        if not isinstance(other, IndexSample):
            return NotImplemented
        return (self.universe == other.universe
                and self.rate_numerator == other.rate_numerator
                and self.seed == other.seed
                and np.array_equal(self.indices, other.indices))

    __hash__ = None
