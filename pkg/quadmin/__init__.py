"""
Quadmin package
Quadratic objective, exact solvers and sampled minimum estimators
"""

from .problem import evaluate_psi, hessian_and_linear, restrict_problem
from .solvers import solve_ball, solve_trust_region, solve_unconstrained
from .estimators import (BallMinEstimate, MinEstimate, approximate_min, approximate_min_ball,
                         normalized_ball_optimum, normalized_optimum)

__all__ = [
    'evaluate_psi', 'hessian_and_linear', 'restrict_problem',
    'solve_unconstrained', 'solve_trust_region', 'solve_ball',
    'approximate_min', 'approximate_min_ball', 'normalized_optimum', 'normalized_ball_optimum',
    'MinEstimate', 'BallMinEstimate',
]
