"""
Structured + pseudorandom decomposition models
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from models.matrix import DenseMatrix


@dataclass(frozen=True)
class BucketingParams:
    """Bucket geometry for rounding singular-vector entries.

    epsilon = gamma**8, J = 1/gamma**2, delta = epsilon/(J sqrt(dim)),
    large threshold = sqrt(J/(epsilon dim)); T buckets of width delta tile
    [0, large threshold).
    """
    gamma: float
    n: int
    m: int

    @property
    def epsilon(self) -> float:
        return self.gamma ** 8

    @property
    def J(self) -> float:
        return 1.0 / self.gamma ** 2

    @property
    def T(self) -> int:
        # arbitrary precision: T overflows floats for small gamma
        return math.ceil((self.J / self.epsilon) ** 1.5)

    @property
    def delta_n(self) -> float:
        return self.epsilon / (self.J * math.sqrt(self.n))

    @property
    def delta_m(self) -> float:
        return self.epsilon / (self.J * math.sqrt(self.m))

    @property
    def large_threshold_n(self) -> float:
        return math.sqrt(self.J / (self.epsilon * self.n))

    @property
    def large_threshold_m(self) -> float:
        return math.sqrt(self.J / (self.epsilon * self.m))


@dataclass
class DecompositionDiagnostics:
    psd_spectral_norm: float = float('nan')
    str_max_norm: float = float('nan')
    block_count: int = 0
    psd_bound: float = float('nan')
    str_bound: float = float('nan')
    psd_ok: bool = False
    str_ok: bool = False
    kept_singular_values: List[float] = field(default_factory=list)
    large_row_sizes: List[int] = field(default_factory=list)
    large_col_sizes: List[int] = field(default_factory=list)
    unrounded_max_norm: float = 0.0
    degenerate: bool = False
    threshold_tie: bool = False


@dataclass(eq=False)
class SpectralDecomposition:
    """A = a_str + a_psd with a_str constant on (row cell x column cell) blocks.

    Cells are labelled by integers; LARGE_CELL marks indices that fell in the
    Large set for some kept component.
    """
    gamma: float
    row_partition: np.ndarray
    col_partition: np.ndarray
    block_values: Dict[Tuple[int, int], float]
    kept_rank: int
    a_str: DenseMatrix
    diagnostics: DecompositionDiagnostics

    LARGE_CELL = -1

    def a_psd(self, A: DenseMatrix) -> DenseMatrix:
        return DenseMatrix(A.data - self.a_str.data, copy=False)

    @property
    def row_cell_sizes(self) -> Dict[int, int]:
        labels, counts = np.unique(self.row_partition, return_counts=True)
        return {int(label): int(count) for label, count in zip(labels, counts)}

    @property
    def col_cell_sizes(self) -> Dict[int, int]:
        labels, counts = np.unique(self.col_partition, return_counts=True)
        return {int(label): int(count) for label, count in zip(labels, counts)}
