"""
Structured + pseudorandom decomposition A = A^str + A^psd.

Singular components with sigma >= gamma * N * L (N = sqrt(nm),
L = max |A_ij|) are kept; their singular vectors are bucket-rounded and the
rounded components summed into A^str. Rows (columns) are partitioned by the
tuple of their bucket labels over all kept components, and indices in the
Large set of any component form a single extra cell on which every rounded
vector is zero. A^str is assembled from one value per (row cell, column
cell) pair, so it is exactly constant on blocks.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from decomp.bucketing import bucketing_params, check_gamma, round_vector
from linalg import max_norm, power_iteration_sigma1, svd
from models.decomposition import DecompositionDiagnostics, SpectralDecomposition
from models.matrix import DenseMatrix
from utils.config import get_config
from utils.errors import DimensionMismatch

logger = logging.getLogger(__name__)

LARGE_CELL = SpectralDecomposition.LARGE_CELL


def _partition(label_rows, large: np.ndarray, size: int) -> np.ndarray:
    """Common refinement of per-component labels; Large indices go to LARGE_CELL"""
    partition = np.full(size, LARGE_CELL, dtype=np.int64)
    regular = ~large
    if not np.any(regular):
        return partition
    if label_rows:
        keys = np.stack(label_rows, axis=1)[regular]
        _, cells = np.unique(keys, axis=0, return_inverse=True)
        partition[regular] = np.asarray(cells).reshape(-1)
    else:
        partition[regular] = 0
    return partition


def _representatives(partition: np.ndarray):
    labels, first, inverse = np.unique(partition, return_index=True, return_inverse=True)
    return labels, first, np.asarray(inverse).reshape(-1)


def _trivial(A: DenseMatrix, gamma: float) -> SpectralDecomposition:
    logger.warning("decompose called on the zero matrix; returning A^str = 0")
    n, m = A.shape
    diagnostics = DecompositionDiagnostics(
        psd_spectral_norm=0.0, str_max_norm=0.0, block_count=1, psd_bound=0.0, str_bound=0.0,
        psd_ok=True, str_ok=True, degenerate=True,
    )
    return SpectralDecomposition(
        gamma=gamma,
        row_partition=np.zeros(n, dtype=np.int64),
        col_partition=np.zeros(m, dtype=np.int64),
        block_values={(0, 0): 0.0},
        kept_rank=0,
        a_str=DenseMatrix.zeros(n, m),
        diagnostics=diagnostics,
    )


def decompose(A: DenseMatrix, gamma: float, iterations: Optional[int] = None) -> SpectralDecomposition:
    check_gamma(gamma)
    L = max_norm(A)
    if L == 0.0:
        return _trivial(A, gamma)

    n, m = A.shape
    N = math.sqrt(n * m)
    params = bucketing_params(gamma, n, m)
    config = get_config()

    factors = svd(A)
    sigmas = factors.singular_values
    threshold = gamma * N * L
    kept_rank = int(np.count_nonzero(sigmas >= threshold))
    logger.info("decompose %dx%d: gamma=%.3g threshold=%.4g kept_rank=%d", n, m, gamma, threshold, kept_rank)

    threshold_tie = False
    if 0 < kept_rank < sigmas.size and sigmas[kept_rank - 1] - sigmas[kept_rank] <= 1e-8 * sigmas[0]:
        threshold_tie = True
        logger.warning("singular values %d and %d are tied at the threshold; kept subspace is not unique",
                       kept_rank, kept_rank + 1)

    row_labels, col_labels = [], []
    row_values, col_values = [], []
    large_rows = np.zeros(n, dtype=bool)
    large_cols = np.zeros(m, dtype=bool)
    large_row_sizes, large_col_sizes = [], []
    for ell in range(kept_rank):
        u = round_vector(factors.left_vectors[:, ell], params.delta_n, params.large_threshold_n,
                         config.edge_tolerance)
        v = round_vector(factors.right_vectors[:, ell], params.delta_m, params.large_threshold_m,
                         config.edge_tolerance)
        row_labels.append(u.labels)
        col_labels.append(v.labels)
        row_values.append(u.values)
        col_values.append(v.values)
        large_rows |= u.large
        large_cols |= v.large
        large_row_sizes.append(int(np.count_nonzero(u.large)))
        large_col_sizes.append(int(np.count_nonzero(v.large)))

    row_partition = _partition(row_labels, large_rows, n)
    col_partition = _partition(col_labels, large_cols, m)

    row_cells, row_first, row_inverse = _representatives(row_partition)
    col_cells, col_first, col_inverse = _representatives(col_partition)
    if kept_rank:
        u_hat = np.stack(row_values, axis=1)
        v_hat = np.stack(col_values, axis=1)
        u_hat[large_rows] = 0.0
        v_hat[large_cols] = 0.0
        blocks = (u_hat[row_first] * sigmas[:kept_rank]) @ v_hat[col_first].T
        unrounded = (factors.left_vectors[:, :kept_rank] * sigmas[:kept_rank]) @ factors.right_vectors[:, :kept_rank].T
        unrounded_max = float(np.abs(unrounded).max())
    else:
        blocks = np.zeros((row_cells.size, col_cells.size))
        unrounded_max = 0.0

    a_str = DenseMatrix(blocks[np.ix_(row_inverse, col_inverse)], copy=False)
    block_values = {
        (int(rc), int(cc)): float(blocks[i, j])
        for i, rc in enumerate(row_cells) for j, cc in enumerate(col_cells)
    }

    diagnostics = DecompositionDiagnostics(
        kept_singular_values=[float(s) for s in sigmas[:kept_rank]],
        large_row_sizes=large_row_sizes,
        large_col_sizes=large_col_sizes,
        unrounded_max_norm=unrounded_max,
        threshold_tie=threshold_tie,
    )
    D = SpectralDecomposition(gamma=float(gamma), row_partition=row_partition, col_partition=col_partition,
                              block_values=block_values, kept_rank=kept_rank, a_str=a_str,
                              diagnostics=diagnostics)

    diagnostics.block_count = count_blocks(D)
    diagnostics.psd_spectral_norm, diagnostics.psd_bound, diagnostics.psd_ok = verify_psd_norm(
        A, D, gamma, iterations=iterations)
    diagnostics.str_max_norm, diagnostics.str_bound, diagnostics.str_ok = verify_str_max(D, L, gamma)
    if not (diagnostics.psd_ok and diagnostics.str_ok):
        logger.warning("decomposition bound check failed: psd %.4g <= %.4g is %s, str %.4g <= %.4g is %s",
                       diagnostics.psd_spectral_norm, diagnostics.psd_bound, diagnostics.psd_ok,
                       diagnostics.str_max_norm, diagnostics.str_bound, diagnostics.str_ok)
    return D


def verify_psd_norm(A: DenseMatrix, D: SpectralDecomposition, gamma: float,
                    iterations: Optional[int] = None) -> Tuple[float, float, bool]:
    """sigma_1(A - A^str) against 7 gamma N L"""
    if A.shape != D.a_str.shape:
        raise DimensionMismatch(f"A is {A.shape}, decomposition is {D.a_str.shape}")
    if iterations is None:
        iterations = get_config().verifier_iterations
    n, m = A.shape
    bound = 7.0 * gamma * math.sqrt(n * m) * max_norm(A)
    norm = power_iteration_sigma1(D.a_psd(A), iterations=iterations)
    return norm, bound, norm <= bound


def verify_str_max(D: SpectralDecomposition, L: float, gamma: float) -> Tuple[float, float, bool]:
    """max |A^str_ij| against 2 L / gamma^11"""
    value = max_norm(D.a_str)
    bound = 2.0 * L / gamma ** 11
    return value, bound, value <= bound


def count_blocks(D: SpectralDecomposition) -> int:
    """(# nonempty row cells) x (# nonempty column cells), Large cells included"""
    return int(np.unique(D.row_partition).size * np.unique(D.col_partition).size)
