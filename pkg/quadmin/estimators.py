"""
Sampled estimators for the minimum of psi.

Both estimators draw S (each index w.p. k/n), abort when |S| > 2k, solve the
restricted problem exactly and report the normalized value z~/|S|^2, which
is compared against z*/n^2 of the full problem.
"""

import logging
import math
from typing import NamedTuple

from models.problem import QuadraticProblem, QuadSolution, TrsSolution
from models.sample import IndexSample
from quadmin.problem import restrict_problem
from quadmin.solvers import solve_ball, solve_unconstrained
from sampling import checked_sample
from utils.errors import InvalidRadius

logger = logging.getLogger(__name__)


class MinEstimate(NamedTuple):
    z_tilde_normalized: float
    sample: IndexSample
    subsolution: QuadSolution


class BallMinEstimate(NamedTuple):
    z_tilde_normalized: float
    sample: IndexSample
    subsolution: TrsSolution


def approximate_min(P: QuadraticProblem, k: int, seed: int) -> MinEstimate:
    S = checked_sample(P.n, k, seed)
    subsolution = solve_unconstrained(restrict_problem(P, S))
    if not subsolution.is_finite:
        logger.info("sampled subproblem is unbounded (|S|=%d, seed=%d)", S.size, seed)
        return MinEstimate(-math.inf, S, subsolution)
    return MinEstimate(subsolution.value / S.size ** 2, S, subsolution)


def approximate_min_ball(P: QuadraticProblem, r: float, k: int, seed: int) -> BallMinEstimate:
    """Same as approximate_min over the ball of radius sqrt(|S|/n) r"""
    if not r > 0:
        raise InvalidRadius(f"radius must be positive, got {r}")
    S = checked_sample(P.n, k, seed)
    sub_radius = math.sqrt(S.size / P.n) * r
    subsolution = solve_ball(restrict_problem(P, S), sub_radius)
    return BallMinEstimate(subsolution.value / S.size ** 2, S, subsolution)


def normalized_optimum(P: QuadraticProblem) -> float:
    """z*/n^2 of the full unconstrained problem (-inf when unbounded)"""
    solution = solve_unconstrained(P)
    return solution.value / P.n ** 2 if solution.is_finite else -math.inf


def normalized_ball_optimum(P: QuadraticProblem, r: float) -> float:
    return solve_ball(P, r).value / P.n ** 2
