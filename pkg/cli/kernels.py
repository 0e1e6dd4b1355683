"""
RBF Gram matrices and synthetic point sets
"""

import math

import numpy as np
from scipy.spatial.distance import cdist

from models.matrix import DenseMatrix
from utils.errors import DimensionMismatch, InvalidSigma
from utils.rng import make_rng


def rbf_gram(points, sigma: float) -> DenseMatrix:
    """K_ij = exp(-||x_i - x_j||^2 / (2 sigma^2)), unit diagonal"""
    if not (isinstance(sigma, (int, float)) and math.isfinite(sigma) and sigma > 0):
        raise InvalidSigma(f"sigma must be a positive finite number, got {sigma!r}")
    x = np.asarray(points, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
        raise DimensionMismatch(f"points must form a nonempty n x d array, got shape {x.shape}")
    squared = cdist(x, x, metric='sqeuclidean')
    gram = np.exp(-squared / (2.0 * sigma * sigma))
    np.fill_diagonal(gram, 1.0)
    return DenseMatrix(gram, copy=False)


def synthesize_gaussian(n: int, d: int, seed: int) -> np.ndarray:
    """n x d i.i.d. standard normal points from the pinned generator"""
    if n < 1 or d < 1:
        raise DimensionMismatch(f"n and d must be >= 1, got n={n}, d={d}")
    return make_rng(seed).standard_normal((n, d))
