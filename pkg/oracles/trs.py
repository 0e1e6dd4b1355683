"""
Exhaustive trust-region reference: interior point, a dense multiplier
sweep over the boundary and bottom-eigenvector completions.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from models.matrix import DenseMatrix
from oracles.jacobi import jacobi_eigen
from utils.config import get_config
from utils.errors import DimensionMismatch, InvalidRadius, TooLarge

logger = logging.getLogger(__name__)

TRS_MAX_DIM = 32


def _objective(mu, w, y):
    # y holds eigen-coordinates, one candidate per row
    return np.sum(mu * y * y, axis=-1) + y @ w


def oracle_trs(H, c, r: float, grid: Optional[int] = None) -> Tuple[float, np.ndarray]:
    """Best value of v^T H v + c^T v over ||v|| <= r found by enumeration"""
    if not isinstance(H, DenseMatrix):
        H = DenseMatrix(H)
    if H.rows != H.cols:
        raise DimensionMismatch(f"H must be square, got {H.rows}x{H.cols}")
    if H.rows > TRS_MAX_DIM:
        raise TooLarge(f"oracle_trs handles n <= {TRS_MAX_DIM}, got {H.rows}")
    if not r > 0:
        raise InvalidRadius(f"radius must be positive, got {r}")
    if grid is None:
        grid = get_config().trs_grid
    c = np.asarray(c, dtype=np.float64).reshape(-1)

    mu, Q = jacobi_eigen(H)
    w = Q.T @ c
    n = mu.size
    scale = max(1.0, float(np.abs(mu).max()))
    tol = 1e-9 * scale

    candidates = [np.zeros(n)]

    # interior point of a convex problem
    if mu[0] >= -tol:
        keep = np.abs(mu) > tol
        if np.all(np.abs(w[~keep]) <= 1e-9 * max(1.0, float(np.linalg.norm(w)))):
            y = np.zeros(n)
            y[keep] = -w[keep] / (2.0 * mu[keep])
            if np.linalg.norm(y) <= r:
                candidates.append(y)

    # signed axis points
    for i in range(n):
        e = np.zeros(n)
        e[i] = r
        candidates.extend([e, -e])

    # bottom-eigenvector completion at lam = -mu_min
    lam_lo = max(0.0, -mu[0])
    bottom = (mu - mu[0]) <= tol
    y_perp = np.zeros(n)
    y_perp[~bottom] = -w[~bottom] / (2.0 * (mu[~bottom] + lam_lo))
    slack = r * r - float(y_perp @ y_perp)
    if slack >= 0.0:
        for i in np.flatnonzero(bottom):
            e = np.zeros(n)
            e[i] = np.sqrt(slack)
            candidates.extend([y_perp + e, y_perp - e])

    def boundary_point(lam):
        denom = 2.0 * (mu + lam)
        y = np.divide(-w, denom, out=np.zeros(n), where=denom != 0.0)
        norm = np.linalg.norm(y)
        return y * (r / norm) if norm > 0.0 else y

    # geometric sweep of lam - lam_lo over many decades
    hi = float(np.linalg.norm(c)) / (2.0 * r) + scale + 1.0
    offsets = np.geomspace(1e-12 * scale, hi, grid)
    lams = lam_lo + offsets
    denom = 2.0 * (mu[None, :] + lams[:, None])
    ys = -w[None, :] / denom
    norms = np.linalg.norm(ys, axis=1)
    moving = norms > 0.0
    ys = ys[moving] * (r / norms[moving])[:, None]

    best_y, best_value = None, np.inf
    if ys.size:
        values = _objective(mu, w, ys)
        i = int(np.argmin(values))
        best_y, best_value = ys[i], float(values[i])

        # polish around the best grid point
        lo = offsets[max(i - 1, 0)]
        up = offsets[min(i + 1, offsets.size - 1)]
        if up > lo:
            result = minimize_scalar(lambda x: float(_objective(mu, w, boundary_point(lam_lo + x))),
                                     bounds=(lo, up), method='bounded',
                                     options={'xatol': 1e-14 * max(1.0, up)})
            y = boundary_point(lam_lo + result.x)
            value = float(_objective(mu, w, y))
            if value < best_value:
                best_y, best_value = y, value

    for y in candidates:
        value = float(_objective(mu, w, y))
        if value < best_value:
            best_y, best_value = y, value

    v = Q @ best_y
    h = H.data
    return float(v @ (h @ v) + c @ v), v
