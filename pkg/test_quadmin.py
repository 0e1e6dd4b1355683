#!/usr/bin/env python3
"""
Tests for the quadratic objective, the exact solvers and the sampled
minimum estimators
"""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from models.matrix import DenseMatrix
from models.problem import QuadraticProblem, QuadStatus, TrsCase
from quadmin import (approximate_min, approximate_min_ball, evaluate_psi, hessian_and_linear,
                     normalized_ball_optimum, normalized_optimum, restrict_problem, solve_ball,
                     solve_trust_region, solve_unconstrained)
from sampling import sample_indices
from utils.errors import DimensionMismatch, InvalidRadius, InvalidRate


def random_problem(n, seed, convex=True):
    rng = np.random.default_rng(seed)
    A = rng.uniform(-1.0, 1.0, (n, n))
    d = rng.uniform(1.0, 2.0, n) if convex else rng.uniform(-1.0, 1.0, n)
    b = rng.uniform(-1.0, 1.0, n)
    return QuadraticProblem(DenseMatrix(A), d, b)


def assert_kkt(H, c, solution):
    h = H.data if isinstance(H, DenseMatrix) else np.asarray(H)
    c = np.asarray(c, dtype=float)
    v, lam, r = solution.minimizer, solution.multiplier, solution.radius
    norm = np.linalg.norm(v)
    assert norm <= r * (1 + 1e-8)
    assert lam >= 0.0
    assert lam * (r - norm) <= 1e-6 * r
    residual = 2.0 * (h + lam * np.eye(h.shape[0])) @ v + c
    assert np.linalg.norm(residual) <= 1e-6 * max(1.0, np.linalg.norm(c))
    assert solution.value == pytest.approx(float(v @ h @ v + c @ v), rel=1e-10, abs=1e-12)


# ============== OBJECTIVE ==============

def test_evaluate_psi_examples():
    eye = DenseMatrix(np.eye(2))
    assert evaluate_psi(QuadraticProblem(eye, [0, 0], [0, 0]), [1, 1]) == pytest.approx(2.0)
    assert evaluate_psi(QuadraticProblem(eye, [1, 1], [0, 0]), [1, 1]) == pytest.approx(6.0)
    assert evaluate_psi(QuadraticProblem(DenseMatrix([[2.0]]), [1.0], [-4.0]), [1.0]) == pytest.approx(-1.0)


def test_evaluate_psi_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        evaluate_psi(QuadraticProblem(DenseMatrix(np.eye(2)), [0, 0], [0, 0]), [1, 1, 1])


def test_problem_validation():
    with pytest.raises(DimensionMismatch):
        QuadraticProblem(DenseMatrix(np.ones((2, 3))), [0, 0], [0, 0])
    with pytest.raises(DimensionMismatch):
        QuadraticProblem(DenseMatrix(np.eye(2)), [0, 0, 0], [0, 0])
    P = QuadraticProblem(DenseMatrix([[0.5, -3.0], [0.0, 1.0]]), [2.0, 0.0], [0.0, -1.0])
    assert P.L == 3.0
    assert P.n == 2


def test_hessian_and_linear_examples():
    H, c = hessian_and_linear(QuadraticProblem(DenseMatrix([[0.0, 2.0], [0.0, 0.0]]), [0, 0], [0, 0]))
    np.testing.assert_array_equal(H.data, [[0.0, 1.0], [1.0, 0.0]])
    H, c = hessian_and_linear(QuadraticProblem(DenseMatrix.zeros(2, 2), [1, 1], [3, -1]))
    np.testing.assert_array_equal(H.data, 2.0 * np.eye(2))
    np.testing.assert_array_equal(c, [6.0, -2.0])


def test_hessian_identity_at_random_points():
    P = random_problem(5, seed=0, convex=False)
    H, c = hessian_and_linear(P)
    np.testing.assert_array_equal(H.data, H.data.T)
    rng = np.random.default_rng(1)
    for _ in range(20):
        v = rng.standard_normal(5)
        assert float(v @ H.data @ v + c @ v) == pytest.approx(evaluate_psi(P, v), rel=1e-10, abs=1e-12)


# ============== UNCONSTRAINED ==============

def test_solve_unconstrained_one_dimensional():
    solution = solve_unconstrained(QuadraticProblem(DenseMatrix([[2.0]]), [1.0], [-4.0]))
    assert solution.status is QuadStatus.FINITE
    assert solution.minimizer[0] == pytest.approx(2.0 / 3.0)
    assert solution.value == pytest.approx(-4.0 / 3.0)


def test_solve_unconstrained_unbounded():
    negative = solve_unconstrained(QuadraticProblem(DenseMatrix.zeros(2, 2), [-1, -1], [0, 0]))
    assert negative.status is QuadStatus.UNBOUNDED
    assert negative.value == -math.inf
    assert negative.minimizer is None

    # linear term along a null direction of H
    flat = solve_unconstrained(QuadraticProblem(DenseMatrix.zeros(2, 2), [0, 1], [1, 0]))
    assert flat.status is QuadStatus.UNBOUNDED


def test_solve_unconstrained_singular_but_bounded():
    solution = solve_unconstrained(QuadraticProblem(DenseMatrix.zeros(2, 2), [0, 1], [0, -2]))
    assert solution.is_finite
    # psi = 2 v2^2 - 4 v2 -> v2 = 1, value -2; v1 free, pseudoinverse picks 0
    np.testing.assert_allclose(solution.minimizer, [0.0, 1.0], atol=1e-12)
    assert solution.value == pytest.approx(-2.0)


def test_solve_unconstrained_value_matches_minimizer():
    P = random_problem(12, seed=4)
    solution = solve_unconstrained(P)
    assert solution.is_finite
    assert solution.value == pytest.approx(evaluate_psi(P, solution.minimizer), rel=1e-8)
    H, c = hessian_and_linear(P)
    np.testing.assert_allclose(2.0 * H.data @ solution.minimizer, -c, atol=1e-8)


# ============== BALL ==============

def test_solve_ball_indefinite_no_linear_term():
    solution = solve_trust_region(np.diag([1.0, -1.0]), [0.0, 0.0], 1.0)
    assert solution.value == pytest.approx(-1.0)
    np.testing.assert_allclose(np.abs(solution.minimizer), [0.0, 1.0], atol=1e-12)
    assert solution.case_tag is TrsCase.BOUNDARY
    assert_kkt(np.diag([1.0, -1.0]), [0.0, 0.0], solution)


def test_solve_ball_interior():
    P = QuadraticProblem(DenseMatrix([[1.0]]), [0.0], [-1.0])
    solution = solve_ball(P, 1.0)
    assert solution.case_tag is TrsCase.INTERIOR
    assert solution.minimizer[0] == pytest.approx(0.5)
    assert solution.value == pytest.approx(-0.25)


@pytest.mark.parametrize("r", [0.25, 0.5, 0.75, 1.0, 2.0])
def test_solve_ball_hard_case_family(r):
    # H = diag(-1, 0), c = (0, -1): hard case once r >= 1/2
    H = np.diag([-1.0, 0.0])
    c = np.array([0.0, -1.0])
    solution = solve_trust_region(H, c, r)
    expected = -r * r - 0.25 if r >= 0.5 else -r
    assert solution.value == pytest.approx(expected, abs=1e-9)
    assert_kkt(H, c, solution)
    if r > 0.5:
        assert solution.case_tag is TrsCase.HARD_CASE
        # tie-break: first nonzero component of the bottom eigenvector is positive
        assert solution.minimizer[0] > 0


def test_solve_ball_random_kkt():
    rng = np.random.default_rng(8)
    for _ in range(25):
        n = int(rng.integers(1, 10))
        m = rng.standard_normal((n, n))
        H = 0.5 * (m + m.T)
        c = rng.standard_normal(n)
        r = float(rng.uniform(0.1, 3.0))
        assert_kkt(H, c, solve_trust_region(H, c, r))


def near_hard_case(n, multiplicity, eps, seed):
    """H with a repeated bottom eigenvalue -1 and c almost orthogonal to it"""
    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    mu = np.concatenate([np.full(multiplicity, -1.0), rng.uniform(0.5, 3.0, n - multiplicity)])
    w = np.concatenate([eps * rng.choice([-1.0, 1.0], multiplicity),
                        rng.uniform(0.5, 1.5, n - multiplicity)])
    return (Q * mu) @ Q.T, Q @ w


@pytest.mark.parametrize("eps", [3e-9, 1e-7, 1e-5])
def test_solve_ball_tiny_bottom_component(eps):
    H, c = near_hard_case(7, 6, eps, seed=29)
    r = 3.88
    solution = solve_trust_region(H, c, r)
    assert_kkt(H, c, solution)
    assert np.linalg.norm(solution.minimizer) <= r * (1 + 1e-8)
    assert np.linalg.eigvalsh(H + solution.multiplier * np.eye(7))[0] >= -1e-9
    # the eps -> 0 limit is the hard-case value
    mu, Q = np.linalg.eigh(H)
    w = Q.T @ c
    perp = -w[6] / (2.0 * (mu[6] + 1.0))
    limit = -(r * r - perp * perp) + mu[6] * perp * perp + w[6] * perp
    assert solution.value == pytest.approx(limit, abs=10 * eps * r + 1e-9)


def test_solve_ball_near_hard_case_sweep():
    rng = np.random.default_rng(199)
    for i in range(60):
        n = int(rng.integers(2, 9))
        multiplicity = int(rng.integers(1, n))
        eps = 10.0 ** rng.uniform(-12, -3)
        H, c = near_hard_case(n, multiplicity, eps, seed=i)
        r = float(rng.uniform(0.5, 5.0))
        solution = solve_trust_region(H, c, r)
        assert_kkt(H, c, solution)
        assert np.linalg.eigvalsh(H + solution.multiplier * np.eye(n))[0] >= -1e-8


def test_solve_ball_monotone_in_radius():
    P = random_problem(8, seed=2, convex=False)
    values = [solve_ball(P, r).value for r in (0.1, 0.2, 0.5, 1.0, 2.0, 5.0)]
    assert all(later <= earlier + 1e-12 for earlier, later in zip(values, values[1:]))


def test_solve_ball_agrees_with_unconstrained():
    P = random_problem(10, seed=3)
    free = solve_unconstrained(P)
    radius = 2.0 * np.linalg.norm(free.minimizer)
    ball = solve_ball(P, radius)
    assert ball.case_tag is TrsCase.INTERIOR
    assert ball.value == pytest.approx(free.value, rel=1e-8)


def test_solve_ball_rejects_bad_radius():
    with pytest.raises(InvalidRadius):
        solve_trust_region(np.eye(2), [0, 0], 0.0)
    with pytest.raises(DimensionMismatch):
        solve_trust_region(np.eye(2), [0, 0, 0], 1.0)


# ============== ESTIMATORS ==============

def test_approximate_min_full_sample():
    P = random_problem(40, seed=5)
    estimate = approximate_min(P, k=40, seed=17)
    assert estimate.sample.size == 40
    assert estimate.z_tilde_normalized == pytest.approx(normalized_optimum(P), rel=1e-9)


def test_approximate_min_single_index():
    P = QuadraticProblem(DenseMatrix([[2.0]]), [1.0], [-4.0])
    estimate = approximate_min(P, k=1, seed=0)
    assert estimate.z_tilde_normalized == pytest.approx(-4.0 / 3.0)


def test_approximate_min_scaling():
    P = random_problem(200, seed=6)
    base = approximate_min(P, k=50, seed=9).z_tilde_normalized
    scaled = approximate_min(P.scaled(3.5), k=50, seed=9).z_tilde_normalized
    assert scaled == pytest.approx(3.5 * base, rel=1e-9)


def test_approximate_min_reports_unbounded_subproblem():
    P = QuadraticProblem(DenseMatrix.zeros(30, 30), -np.ones(30), np.zeros(30))
    estimate = approximate_min(P, k=10, seed=next(s for s in range(100)
                                                  if 0 < sample_indices(30, 10, s).size <= 20))
    assert estimate.z_tilde_normalized == -math.inf
    assert not estimate.subsolution.is_finite


def test_approximate_min_invalid_rate():
    with pytest.raises(InvalidRate):
        approximate_min(random_problem(5, seed=0), k=6, seed=0)


def test_approximate_min_ball_full_sample():
    P = random_problem(30, seed=7, convex=False)
    estimate = approximate_min_ball(P, 2.0, k=30, seed=1)
    assert estimate.subsolution.radius == pytest.approx(2.0)
    assert estimate.z_tilde_normalized == pytest.approx(normalized_ball_optimum(P, 2.0), rel=1e-9)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_approximate_min_ball_rank_one_closed_form(seed):
    n, r = 64, 3.0
    P = QuadraticProblem(DenseMatrix.zeros(n, n), np.zeros(n), -np.ones(n))
    expected = -r / math.sqrt(n)
    assert normalized_ball_optimum(P, r) == pytest.approx(expected, rel=1e-9)
    estimate = approximate_min_ball(P, r, k=16, seed=seed)
    assert estimate.z_tilde_normalized == pytest.approx(expected, rel=1e-9)


def test_restrict_problem():
    P = random_problem(6, seed=1)
    S = sample_indices(6, 3, seed=4)
    sub = restrict_problem(P, S)
    assert sub.n == S.size
    np.testing.assert_array_equal(sub.d, P.d[S.indices])
    np.testing.assert_array_equal(sub.A.data, P.A.data[np.ix_(S.indices, S.indices)])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
