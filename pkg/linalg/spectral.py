"""
Spectral routines: symmetric eigendecomposition, thin SVD and
power iteration with deflation.

Dense factorizations go through LAPACK (numpy.linalg); the from-scratch
Jacobi solver lives in the oracles package as an independent cross-check.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from models.matrix import DenseMatrix, SvdResult
from utils.config import get_config
from utils.errors import ConfigError, DimensionMismatch, NoConvergence, NotSymmetric, RankTooLarge
from utils.rng import make_rng

logger = logging.getLogger(__name__)


def symmetric_eigen(H: DenseMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (nondecreasing) and orthonormal eigenvectors of a symmetric matrix"""
    h = H.data
    if H.rows != H.cols:
        raise DimensionMismatch(f"symmetric_eigen needs a square matrix, got {H.rows}x{H.cols}")
    scale = max(1.0, float(np.abs(h).max()))
    asymmetry = float(np.abs(h - h.T).max())
    if asymmetry > get_config().symmetry_tolerance * scale:
        raise NotSymmetric(f"max |H - H^T| = {asymmetry:.3e} exceeds tolerance")
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(0.5 * (h + h.T))
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"symmetric eigendecomposition failed: {e}") from e
    return eigenvalues, eigenvectors


def svd(A: DenseMatrix) -> SvdResult:
    try:
        u, s, vt = np.linalg.svd(A.data, full_matrices=False)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD failed: {e}") from e
    return SvdResult(singular_values=s, left_vectors=u, right_vectors=vt.T)


def singular_values(A: DenseMatrix) -> np.ndarray:
    try:
        return np.linalg.svd(A.data, compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD failed: {e}") from e


def top_singular_values(A: DenseMatrix, t: int, iterations: Optional[int] = None,
                        seed: int = 0) -> np.ndarray:
    """Estimate sigma_1 >= ... >= sigma_t by power iteration with deflation.

    Each component runs `iterations` steps of v <- normalize(A^T A v) from a
    seeded Gaussian start; after it converges, sigma u v^T is subtracted from
    the operator before the next component is extracted. The subtraction is
    applied to matrix-vector products, so A itself is never copied.
    """
    if iterations is None:
        iterations = get_config().power_iterations
    if iterations < 1:
        raise ConfigError(f"iterations must be >= 1, got {iterations}")
    if not 1 <= t <= min(A.rows, A.cols):
        raise RankTooLarge(f"t={t} outside [1, {min(A.rows, A.cols)}]")

    a = A.data
    rng = make_rng(seed)
    us = np.zeros((A.rows, t))
    vs = np.zeros((A.cols, t))
    sigmas = np.zeros(t)

    for ell in range(t):
        U, V, S = us[:, :ell], vs[:, :ell], sigmas[:ell]

        def matvec(x):
            return a @ x - U @ (S * (V.T @ x))

        def rmatvec(y):
            return a.T @ y - V @ (S * (U.T @ y))

        v = rng.standard_normal(A.cols)
        v /= np.linalg.norm(v)
        for _ in range(iterations):
            z = rmatvec(matvec(v))
            norm_z = np.linalg.norm(z)
            if norm_z == 0.0:
                break
            v = z / norm_z

        av = matvec(v)
        sigma = float(np.linalg.norm(av))
        if sigma == 0.0:
            # remaining operator is zero; later components are zero too
            logger.debug("power iteration hit a zero residual at component %d", ell + 1)
            break
        sigmas[ell] = sigma
        us[:, ell] = av / sigma
        vs[:, ell] = v

    return np.sort(sigmas)[::-1]


def power_iteration_sigma1(A: DenseMatrix, iterations: Optional[int] = None, seed: int = 0) -> float:
    return float(top_singular_values(A, 1, iterations=iterations, seed=seed)[0])
