"""
Eckart-Young rank residuals
"""

from typing import Optional

import numpy as np

from linalg import frobenius_norm, singular_values, top_singular_values
from models.matrix import DenseMatrix
from utils.errors import ConfigError, RankTooLarge

METHODS = ('svd', 'power')


def residual_profile(B: DenseMatrix, t: int, method: str = 'svd',
                     iterations: Optional[int] = None, seed: int = 0) -> np.ndarray:
    """Residuals Lambda_r for r = 0..t, clamped to >= 0.

    "svd" sums the tail sigma_{r+1}^2 + ... of the full singular spectrum;
    "power" subtracts the top-r deflated power-iteration values from ||B||_F^2.
    """
    if method not in METHODS:
        raise ConfigError(f"unknown residual method {method!r}")
    if not 0 <= t <= min(B.rows, B.cols):
        raise RankTooLarge(f"t={t} outside [0, {min(B.rows, B.cols)}]")

    if method == 'svd':
        squares = singular_values(B) ** 2
        tails = np.append(np.cumsum(squares[::-1])[::-1], 0.0)
        return np.maximum(tails[:t + 1], 0.0)

    total = frobenius_norm(B) ** 2
    if t == 0:
        return np.array([total])
    squares = top_singular_values(B, t, iterations=iterations, seed=seed) ** 2
    heads = np.concatenate(([0.0], np.cumsum(squares)))
    return np.maximum(total - heads, 0.0)


def rank_residual(B: DenseMatrix, t: int, method: str = 'svd',
                  iterations: Optional[int] = None, seed: int = 0) -> float:
    """min over rank-t X of ||B - X||_F^2"""
    return float(residual_profile(B, t, method=method, iterations=iterations, seed=seed)[t])
