"""
Quadratic minimization problem and solution models
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from models.matrix import DenseMatrix
from utils.errors import DimensionMismatch, NonFiniteEntry


def _as_vector(values, name) -> np.ndarray:
    vector = np.array(values, dtype=np.float64).reshape(-1)
    if not np.isfinite(vector).all():
        raise NonFiniteEntry(f"{name} contains non-finite entries")
    vector.setflags(write=False)
    return vector


class QuadraticProblem:
    """psi(v) = <v, A v> + n <v, diag(d) v> + n <b, v> over v in R^n"""

    __slots__ = ('A', 'd', 'b')

    def __init__(self, A: DenseMatrix, d, b):
        if not isinstance(A, DenseMatrix):
            A = DenseMatrix(A)
        if A.rows != A.cols:
            raise DimensionMismatch(f"A must be square, got {A.rows}x{A.cols}")
        d = _as_vector(d, 'd')
        b = _as_vector(b, 'b')
        if d.size != A.rows or b.size != A.rows:
            raise DimensionMismatch(
                f"d and b must have length {A.rows}, got {d.size} and {b.size}"
            )
        self.A = A
        self.d = d
        self.b = b

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def L(self) -> float:
        return float(max(np.abs(self.A.data).max(), np.abs(self.d).max(), np.abs(self.b).max()))

    def scaled(self, factor: float) -> "QuadraticProblem":
        return QuadraticProblem(self.A.scaled(factor), self.d * factor, self.b * factor)

    def __repr__(self):
        return f"QuadraticProblem(n={self.n}, L={self.L:.4g})"


class QuadStatus(str, Enum):
    FINITE = 'Finite'
    UNBOUNDED = 'Unbounded'


@dataclass(frozen=True, eq=False)
class QuadSolution:
    minimizer: Optional[np.ndarray]
    value: float
    status: QuadStatus

    @property
    def is_finite(self) -> bool:
        return self.status is QuadStatus.FINITE


class TrsCase(str, Enum):
    INTERIOR = 'Interior'
    BOUNDARY = 'Boundary'
    HARD_CASE = 'HardCase'


@dataclass(frozen=True, eq=False)
class TrsSolution:
    """Global minimizer of v^T H v + c^T v over ||v|| <= radius"""
    minimizer: np.ndarray
    value: float
    multiplier: float
    case_tag: TrsCase
    radius: float = field(default=float('nan'))
