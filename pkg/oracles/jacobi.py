"""
Cyclic Jacobi eigensolver and the Gram-route singular spectrum.

This is the reference path for the LAPACK-backed routines in linalg and
shares no code with them.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from models.matrix import DenseMatrix
from utils.config import get_config
from utils.errors import DimensionMismatch, NoConvergence, TooLarge

logger = logging.getLogger(__name__)


def _rotate(a: np.ndarray, vectors: np.ndarray, p: int, q: int):
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = vectors[:, p].copy(), vectors[:, q].copy()
    vectors[:, p] = c * vec_p - s * vec_q
    vectors[:, q] = s * vec_p + c * vec_q


def jacobi_eigen(H, sweeps: Optional[int] = None,
                 tolerance: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (nondecreasing) and eigenvectors of a symmetric matrix.

    Each sweep rotates away every off-diagonal pair (p, q) in row order;
    iteration stops once the off-diagonal Frobenius mass drops below
    tolerance * ||H||_F.
    """
    config = get_config()
    if sweeps is None:
        sweeps = config.jacobi_sweeps
    if tolerance is None:
        tolerance = config.jacobi_tolerance
    a = np.array(H.data if isinstance(H, DenseMatrix) else H, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"jacobi_eigen needs a square matrix, got shape {a.shape}")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    vectors = np.eye(n)
    scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)

    for sweep in range(sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tolerance * scale:
            logger.debug("jacobi converged after %d sweeps", sweep)
            break
        if sweep == sweeps:
            raise NoConvergence(f"jacobi did not converge in {sweeps} sweeps (off-diagonal {off:.3e})")
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > np.finfo(float).tiny:
                    _rotate(a, vectors, p, q)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind='stable')
    return eigenvalues[order], vectors[:, order]


def oracle_spectrum(A: DenseMatrix) -> np.ndarray:
    """Singular values of A from the eigenvalues of its smaller Gram matrix"""
    limit = get_config().oracle_max_dim
    small = min(A.rows, A.cols)
    if small > limit:
        raise TooLarge(f"oracle_spectrum handles min(rows, cols) <= {limit}, got {small}")
    a = A.data
    gram = a.T @ a if A.cols <= A.rows else a @ a.T
    eigenvalues, _ = jacobi_eigen(gram)
    return np.sqrt(np.maximum(eigenvalues, 0.0))[::-1]
