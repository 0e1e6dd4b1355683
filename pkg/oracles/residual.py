"""
Rank-t residual by alternating least squares over explicit factors
"""

import logging
from typing import Optional

import numpy as np

from models.matrix import DenseMatrix
from utils.config import get_config
from utils.errors import RankTooLarge, TooLarge
from utils.rng import make_rng

logger = logging.getLogger(__name__)

ALS_MAX_DIM = 32


def _als(b: np.ndarray, t: int, sweeps: int, rng) -> float:
    total = float(np.sum(b * b))
    u, _ = np.linalg.qr(rng.standard_normal((b.shape[0], t)))
    previous = np.inf
    residual = total
    for _ in range(sweeps):
        # u has orthonormal columns, so the least-squares v is b^T u
        v = b.T @ u
        u, _, _, _ = np.linalg.lstsq(v, b.T, rcond=None)
        u, _ = np.linalg.qr(u.T)
        fit = b - u @ (u.T @ b)
        residual = float(np.sum(fit * fit))
        if previous - residual <= 1e-15 * total:
            break
        previous = residual
    return residual


def oracle_rank_residual(B: DenseMatrix, t: int, restarts: Optional[int] = None,
                         sweeps: Optional[int] = None, seed: int = 0) -> float:
    """Best ||B - U V^T||_F^2 over rank-t factors found from seeded restarts"""
    if max(B.rows, B.cols) > ALS_MAX_DIM:
        raise TooLarge(f"oracle_rank_residual handles dimensions <= {ALS_MAX_DIM}, got {B.shape}")
    if not 0 <= t <= min(B.rows, B.cols):
        raise RankTooLarge(f"t={t} outside [0, {min(B.rows, B.cols)}]")
    config = get_config()
    if restarts is None:
        restarts = config.als_restarts
    if sweeps is None:
        sweeps = config.als_sweeps

    b = B.data
    if t == 0:
        return float(np.sum(b * b))
    rng = make_rng(seed)
    best = min(_als(b, t, sweeps, rng) for _ in range(max(restarts, 1)))
    logger.debug("ALS rank-%d residual %.6g over %d restarts", t, best, restarts)
    return best
