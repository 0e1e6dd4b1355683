"""
Sampled singular-value estimators.

Rows are sampled at rate k/n with the master seed, columns at rate k/m with
seed + 1 (or S_C = S_R for Gram matrices). Restricted quantities are
rescaled by nm/(|S_R||S_C|).
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from linalg import frobenius_norm, power_iteration_sigma1
from models.estimate import SvEstimate
from models.matrix import DenseMatrix
from models.sample import IndexSample
from sampling import checked_sample, restrict_matrix
from svest.residual import residual_profile
from utils.errors import DimensionMismatch, RankTooLarge

logger = logging.getLogger(__name__)


def draw_samples(A: DenseMatrix, k: int, seed: int,
                 symmetric_sample: bool = False) -> Tuple[IndexSample, IndexSample]:
    """Row and column samples for A, aborting on oversize or empty draws"""
    if symmetric_sample and A.rows != A.cols:
        raise DimensionMismatch(f"a shared row/column sample needs a square matrix, got {A.rows}x{A.cols}")
    rows = checked_sample(A.rows, k, seed)
    cols = rows if symmetric_sample else checked_sample(A.cols, k, seed + 1)
    return rows, cols


def _scale(rows: IndexSample, cols: IndexSample) -> float:
    return (rows.universe * cols.universe) / (rows.size * cols.size)


def estimate_sigma1(A: DenseMatrix, k: int, seed: int, iterations: Optional[int] = None,
                    symmetric_sample: bool = False) -> SvEstimate:
    """sqrt(nm/(|S_R||S_C|)) * sigma_1(A restricted to S_R x S_C)"""
    rows, cols = draw_samples(A, k, seed, symmetric_sample)
    sub = restrict_matrix(A, rows, cols)
    scale = _scale(rows, cols)
    sigma = power_iteration_sigma1(sub, iterations=iterations, seed=seed)
    total = frobenius_norm(sub) ** 2
    return SvEstimate(
        t=1,
        estimate=math.sqrt(scale) * sigma,
        row_sample=rows,
        col_sample=cols,
        lambda_t=scale * max(total - sigma * sigma, 0.0),
        lambda_t_minus_1=scale * total,
    )


def _check_rank(t: int, k: int, A: DenseMatrix):
    if t < 1:
        raise RankTooLarge(f"t must be >= 1, got {t}")
    if t > k:
        raise RankTooLarge(f"t={t} exceeds the sample rate numerator k={k}")
    if t > min(A.rows, A.cols):
        raise RankTooLarge(f"t={t} exceeds min(n, m)={min(A.rows, A.cols)}")


def _sampled_profile(A, t, k, seed, method, symmetric_sample, iterations):
    _check_rank(t, k, A)
    rows, cols = draw_samples(A, k, seed, symmetric_sample)
    if t > min(rows.size, cols.size):
        raise RankTooLarge(f"t={t} exceeds the sampled dimensions {rows.size}x{cols.size}")
    sub = restrict_matrix(A, rows, cols)
    profile = _scale(rows, cols) * residual_profile(sub, t, method=method,
                                                    iterations=iterations, seed=seed)
    return rows, cols, profile


def _from_profile(t, rows, cols, profile) -> SvEstimate:
    # Lambda_{t-1} - Lambda_t = sigma_t^2 >= 0
    gap = max(profile[t - 1] - profile[t], 0.0)
    return SvEstimate(t=t, estimate=math.sqrt(gap), row_sample=rows, col_sample=cols,
                      lambda_t=float(profile[t]), lambda_t_minus_1=float(profile[t - 1]))


def estimate_sigma_t(A: DenseMatrix, t: int, k: int, seed: int, method: str = 'svd',
                     symmetric_sample: bool = False, iterations: Optional[int] = None) -> SvEstimate:
    """sqrt(max(Lambda~_{t-1} - Lambda~_t, 0)) from one sampled submatrix"""
    rows, cols, profile = _sampled_profile(A, t, k, seed, method, symmetric_sample, iterations)
    return _from_profile(t, rows, cols, profile)


def estimate_top_spectrum(A: DenseMatrix, t: int, k: int, seed: int, method: str = 'svd',
                          symmetric_sample: bool = False,
                          iterations: Optional[int] = None) -> List[SvEstimate]:
    """Estimates for sigma_1..sigma_t sharing one sample realization.

    Entry i equals estimate_sigma_t(A, i + 1, k, seed, ...) for the same
    arguments whenever method is "svd".
    """
    rows, cols, profile = _sampled_profile(A, t, k, seed, method, symmetric_sample, iterations)
    estimates = [_from_profile(r, rows, cols, profile) for r in range(1, t + 1)]
    logger.debug("top-%d spectrum from a %dx%d sample: %s", t, rows.size, cols.size,
                 np.array([e.estimate for e in estimates]))
    return estimates
