"""
Bernoulli index sampling and restriction of matrices/vectors to samples
"""

from typing import Optional

import numpy as np

from models.matrix import DenseMatrix
from models.sample import IndexSample
from utils.config import get_config
from utils.errors import IndexOutOfRange, InvalidRate, SamplingAborted
from utils.rng import make_rng, normalize_seed


def sample_indices(n: int, k: int, seed: int) -> IndexSample:
    """Keep each i in [0, n) independently with probability k/n.

    One uniform variate is drawn per index, in index order, and i is kept iff
    u_i < k/n.
    """
    if n < 1:
        raise InvalidRate(f"universe must be >= 1, got n={n}")
    if k < 1 or k > n:
        raise InvalidRate(f"rate numerator must satisfy 1 <= k <= n, got k={k}, n={n}")
    seed = normalize_seed(seed)
    uniforms = make_rng(seed).random(n)
    indices = np.flatnonzero(uniforms < k / n)
    indices.setflags(write=False)
    return IndexSample(universe=n, rate_numerator=k, indices=indices, seed=seed)


def oversize_guard(S: IndexSample, k: int, factor: Optional[int] = None) -> bool:
    """True iff |S| <= factor * k (the estimators abort when this is False)"""
    if factor is None:
        factor = get_config().abort_factor
    return S.size <= factor * k


def checked_sample(n: int, k: int, seed: int) -> IndexSample:
    """sample_indices followed by the oversize guard; raises SamplingAborted.

    An empty sample also aborts: every estimator rescales by 1/|S|.
    """
    S = sample_indices(n, k, seed)
    factor = get_config().abort_factor
    if S.size == 0 or not oversize_guard(S, k, factor):
        raise SamplingAborted(S, factor * k)
    return S


def _check_range(indices: np.ndarray, bound: int, what: str):
    if indices.size and (indices.min() < 0 or indices.max() >= bound):
        raise IndexOutOfRange(f"{what} indices must lie in [0, {bound})")


def restrict_matrix(A: DenseMatrix, rows: IndexSample, cols: IndexSample) -> DenseMatrix:
    """(A|_{S_R x S_C})_{j,l} = A[rows[j], cols[l]]"""
    _check_range(rows.indices, A.rows, 'row')
    _check_range(cols.indices, A.cols, 'column')
    return DenseMatrix(A.data[np.ix_(rows.indices, cols.indices)], copy=False)


def restrict_vector(v, S: IndexSample) -> np.ndarray:
    vector = np.asarray(v, dtype=np.float64).reshape(-1)
    _check_range(S.indices, vector.size, 'vector')
    return vector[S.indices]
