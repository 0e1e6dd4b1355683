"""
Gradient-descent reference for strictly convex quadratic minimization
"""

import logging
from typing import Optional

import numpy as np

from models.problem import QuadraticProblem
from oracles.jacobi import jacobi_eigen
from utils.config import get_config
from utils.errors import NotStronglyConvex, TooLarge

logger = logging.getLogger(__name__)


def oracle_quadmin(P: QuadraticProblem, steps: Optional[int] = None,
                   step_size: Optional[float] = None) -> float:
    config = get_config()
    if P.n > config.oracle_max_dim:
        raise TooLarge(f"oracle_quadmin handles n <= {config.oracle_max_dim}, got {P.n}")
    if steps is None:
        steps = config.gd_steps

    n = P.n
    a = P.A.data
    h = 0.5 * (a + a.T) + n * np.diag(P.d)
    c = n * P.b
    eigenvalues, _ = jacobi_eigen(h)
    if eigenvalues[0] < 1e-6:
        raise NotStronglyConvex(f"lambda_min(H) = {eigenvalues[0]:.3e} < 1e-6")
    if step_size is None:
        step_size = 1.0 / (2.0 * eigenvalues[-1])

    v = np.zeros(n)
    stop = 1e-13 * max(1.0, float(np.linalg.norm(c)))
    for step in range(steps):
        gradient = 2.0 * (h @ v) + c
        if np.linalg.norm(gradient) <= stop:
            logger.debug("gradient descent stopped at step %d", step)
            break
        v = v - step_size * gradient
    return float(v @ (a @ v) + n * np.dot(P.d, v * v) + n * np.dot(P.b, v))
