"""
Dense real matrix carrier and SVD result
"""

from dataclasses import dataclass

import numpy as np

from utils.errors import DimensionMismatch, NonFiniteEntry


class DenseMatrix:
    """Row-major real matrix with validated, finite entries.

    The wrapped array is a private read-only float64 copy, so instances can be
    shared across threads without defensive copying by callers.
    """

    __slots__ = ('_data',)

    def __init__(self, data, copy=True):
        if copy:
            array = np.array(data, dtype=np.float64, order='C')
        else:
            array = np.ascontiguousarray(data, dtype=np.float64)
        if array.ndim == 1:
            array = array.reshape(1, -1)
        if array.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D matrix, got {array.ndim} dimensions")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionMismatch(f"matrix must have at least one row and column, got {array.shape}")
        if not np.isfinite(array).all():
            row, col = np.argwhere(~np.isfinite(array))[0]
            raise NonFiniteEntry(f"non-finite entry at ({row}, {col})")
        array.setflags(write=False)
        self._data = array

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols)), copy=False)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def T(self) -> "DenseMatrix":
        return DenseMatrix(self._data.T)

    def scaled(self, factor: float) -> "DenseMatrix":
        return DenseMatrix(self._data * factor, copy=False)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self):
        return f"DenseMatrix(rows={self.rows}, cols={self.cols})"


@dataclass(frozen=True, eq=False)
class SvdResult:
    """Thin SVD: A = U diag(singular_values) V^T with r = min(rows, cols)"""
    singular_values: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray

    @property
    def rank_bound(self) -> int:
        return len(self.singular_values)
