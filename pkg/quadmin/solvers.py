"""
Exact dense solvers for the quadratic objective.

Both solvers work in the eigenbasis of H: with H = Q diag(mu) Q^T and
w = Q^T c, the stationary point of v^T (H + lam I) v + c^T v has
coordinates -w_i / (2 (mu_i + lam)).
"""

import logging
import math

import numpy as np

from linalg import max_norm, symmetric_eigen
from models.matrix import DenseMatrix
from models.problem import QuadraticProblem, QuadSolution, QuadStatus, TrsCase, TrsSolution
from quadmin.problem import evaluate_psi, hessian_and_linear
from utils.config import get_config
from utils.errors import DimensionMismatch, InvalidRadius

logger = logging.getLogger(__name__)


def _tolerances(H: DenseMatrix, c: np.ndarray):
    zero_tol = get_config().zero_eigenvalue_tolerance
    return (zero_tol * max(1.0, max_norm(H)),
            zero_tol * max(1.0, float(np.linalg.norm(c))))


def solve_unconstrained(P: QuadraticProblem) -> QuadSolution:
    """Minimize psi over R^n, or report that it is unbounded below"""
    H, c = hessian_and_linear(P)
    mu, Q = symmetric_eigen(H)
    w = Q.T @ c
    eig_tol, c_tol = _tolerances(H, c)

    if mu[0] < -eig_tol:
        logger.debug("unbounded: lambda_min(H) = %.3e", mu[0])
        return QuadSolution(minimizer=None, value=-math.inf, status=QuadStatus.UNBOUNDED)
    null = np.abs(mu) <= eig_tol
    if np.any(np.abs(w[null]) > c_tol):
        logger.debug("unbounded: linear term has a component on null(H)")
        return QuadSolution(minimizer=None, value=-math.inf, status=QuadStatus.UNBOUNDED)

    # pseudoinverse solution of 2 H v = -c
    coeff = np.zeros_like(w)
    coeff[~null] = -w[~null] / (2.0 * mu[~null])
    v = Q @ coeff
    return QuadSolution(minimizer=v, value=evaluate_psi(P, v), status=QuadStatus.FINITE)


def _quadratic_value(h: np.ndarray, c: np.ndarray, v: np.ndarray) -> float:
    return float(v @ (h @ v) + c @ v)


def _positive_first(q: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(np.abs(q) > 1e-12)
    if nonzero.size and q[nonzero[0]] < 0:
        return -q
    return q


def solve_trust_region(H, c, r: float) -> TrsSolution:
    """Global minimizer of v^T H v + c^T v subject to ||v|| <= r.

    Interior solutions are taken when H is PSD and the pseudoinverse step
    fits inside the ball. Otherwise the multiplier lam > max(0, -mu_min)
    solves ||v(lam)|| = r (safeguarded Newton on 1/||v(lam)|| - 1/r with
    bisection fallback), except in the hard case where c has no component
    on the bottom eigenspace and ||v(-mu_min)|| < r; there the step is
    completed along the bottom eigenvector.
    """
    if not r > 0:
        raise InvalidRadius(f"radius must be positive, got {r}")
    if not isinstance(H, DenseMatrix):
        H = DenseMatrix(H)
    c = np.asarray(c, dtype=np.float64).reshape(-1)
    if c.size != H.rows:
        raise DimensionMismatch(f"c has length {c.size}, H is {H.rows}x{H.cols}")

    config = get_config()
    h = H.data
    mu, Q = symmetric_eigen(H)
    w = Q.T @ c
    eig_tol, c_tol = _tolerances(H, c)
    mu_min = float(mu[0])

    # Interior
    if mu_min >= -eig_tol:
        null = np.abs(mu) <= eig_tol
        if not np.any(np.abs(w[null]) > c_tol):
            coeff = np.zeros_like(w)
            coeff[~null] = -w[~null] / (2.0 * mu[~null])
            if np.linalg.norm(coeff) <= r:
                v = Q @ coeff
                logger.debug("interior trust-region solution")
                return TrsSolution(minimizer=v, value=_quadratic_value(h, c, v), multiplier=0.0,
                                   case_tag=TrsCase.INTERIOR, radius=r)

    lam_lo = max(0.0, -mu_min)
    w_eff = w.copy()

    # Hard case
    if mu_min <= eig_tol:
        bottom = (mu - mu_min) <= eig_tol
        if np.all(np.abs(w[bottom]) <= c_tol):
            w_eff[bottom] = 0.0
            coeff = np.zeros_like(w)
            coeff[~bottom] = -w[~bottom] / (2.0 * (mu[~bottom] + lam_lo))
            perp_norm = float(np.linalg.norm(coeff))
            if perp_norm <= r:
                alpha = math.sqrt(max(r * r - perp_norm * perp_norm, 0.0))
                q = _positive_first(Q[:, np.flatnonzero(bottom)[0]])
                v = Q @ coeff + alpha * q
                tag = TrsCase.HARD_CASE if np.any(c != 0) else TrsCase.BOUNDARY
                logger.debug("hard-case trust-region solution (%s)", tag.value)
                return TrsSolution(minimizer=v, value=_quadratic_value(h, c, v), multiplier=lam_lo,
                                   case_tag=tag, radius=r)

    active = w_eff != 0.0
    wa = w_eff[active]
    # mu + lam_lo without cancellation: the bottom eigenvalue maps to exactly 0
    base = (mu - mu_min if mu_min < 0 else mu)[active]

    def step_norm(tau):
        return math.sqrt(float(np.sum(wa * wa / (4.0 * (base + tau) ** 2))))

    tolerance = config.secular_tolerance * r
    # work in tau = lam - lam_lo; ||v|| <= r holds at b throughout
    a = 0.0
    b = max(float(np.linalg.norm(c)) / (2.0 * r) - mu_min + 1.0 - lam_lo, 1.0)
    tau = b
    for _ in range(config.trs_max_iterations):
        norm_v = step_norm(tau)
        if abs(norm_v - r) <= tolerance:
            break
        if norm_v > r:
            a = tau
        else:
            b = tau
        # Newton step on g(tau) = 1/||v(tau)|| - 1/r
        g = 1.0 / norm_v - 1.0 / r
        dnorm = -float(np.sum(wa * wa / (4.0 * (base + tau) ** 3))) / norm_v
        gprime = -dnorm / (norm_v * norm_v)
        candidate = tau - g / gprime if gprime > 0 else math.nan
        tau = candidate if a < candidate < b else 0.5 * (a + b)
    else:
        logger.warning("secular equation stopped after %d iterations (| ||v|| - r | = %.3e)",
                       config.trs_max_iterations, abs(step_norm(tau) - r))
        if step_norm(tau) > r:
            tau = b

    lam = lam_lo + tau
    coeff = np.zeros_like(w)
    coeff[active] = -wa / (2.0 * (base + tau))
    v = Q @ coeff
    logger.debug("boundary trust-region solution, multiplier %.6g", lam)
    return TrsSolution(minimizer=v, value=_quadratic_value(h, c, v), multiplier=float(lam),
                       case_tag=TrsCase.BOUNDARY, radius=r)


def solve_ball(P: QuadraticProblem, r: float) -> TrsSolution:
    """Minimize psi over the ball ||v||_2 <= r"""
    H, c = hessian_and_linear(P)
    return solve_trust_region(H, c, r)
