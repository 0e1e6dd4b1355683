#!/usr/bin/env python3
"""
Tests for the brute-force oracles
"""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from linalg import singular_values
from models.matrix import DenseMatrix
from models.problem import QuadraticProblem
from oracles import (compare, jacobi_eigen, oracle_quadmin, oracle_rank_residual, oracle_spectrum,
                     oracle_trs)
from quadmin import solve_trust_region, solve_unconstrained
from svest import rank_residual
from utils.errors import DimensionMismatch, InvalidRadius, NotStronglyConvex, RankTooLarge, TooLarge


# ============== JACOBI ==============

def test_jacobi_matches_eigh():
    rng = np.random.default_rng(0)
    m = rng.standard_normal((9, 9))
    h = m + m.T
    values, vectors = jacobi_eigen(h)
    np.testing.assert_allclose(values, np.linalg.eigvalsh(h), atol=1e-10)
    np.testing.assert_allclose(h @ vectors, vectors * values, atol=1e-9)
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(9), atol=1e-12)


def test_jacobi_diagonal_input():
    values, vectors = jacobi_eigen(np.diag([2.0, -1.0, 0.5]))
    np.testing.assert_array_equal(values, [-1.0, 0.5, 2.0])
    np.testing.assert_array_equal(np.abs(vectors), np.eye(3)[:, [1, 2, 0]])


def test_jacobi_rejects_rectangular():
    with pytest.raises(DimensionMismatch):
        jacobi_eigen(np.ones((2, 3)))


# ============== SPECTRUM ==============

def test_oracle_spectrum_examples():
    np.testing.assert_allclose(oracle_spectrum(DenseMatrix(np.diag([3.0, 2.0, 1.0]))), [3.0, 2.0, 1.0])
    ones = oracle_spectrum(DenseMatrix(np.ones((4, 7))))
    assert ones[0] == pytest.approx(math.sqrt(28.0), rel=1e-12)
    np.testing.assert_allclose(ones[1:], 0.0, atol=1e-6)


def test_oracle_spectrum_matches_lapack():
    rng = np.random.default_rng(2)
    A = DenseMatrix(rng.standard_normal((10, 10)))
    np.testing.assert_allclose(oracle_spectrum(A), singular_values(A), rtol=1e-9, atol=1e-7)


def test_oracle_spectrum_too_large():
    with pytest.raises(TooLarge):
        oracle_spectrum(DenseMatrix(np.ones((65, 65))))
    # the limit applies to the smaller side
    assert oracle_spectrum(DenseMatrix(np.ones((100, 3)))).size == 3


# ============== TRUST REGION ==============

def test_oracle_trs_examples():
    value, v = oracle_trs(np.diag([1.0, -1.0]), [0.0, 0.0], 1.0)
    assert value == pytest.approx(-1.0, abs=1e-9)
    assert np.linalg.norm(v) <= 1.0 + 1e-12

    value, _ = oracle_trs(np.diag([-1.0, 0.0]), [0.0, -1.0], 1.0)
    assert value == pytest.approx(-1.25, abs=1e-9)

    value, v = oracle_trs([[1.0]], [-1.0], 1.0)
    assert value == pytest.approx(-0.25, abs=1e-9)
    assert v[0] == pytest.approx(0.5, abs=1e-6)


def test_oracle_trs_brackets_solver():
    rng = np.random.default_rng(5)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        m = rng.standard_normal((n, n))
        H = 0.5 * (m + m.T)
        c = rng.standard_normal(n)
        r = float(rng.uniform(0.2, 2.5))
        solution = solve_trust_region(H, c, r)
        value, v = oracle_trs(H, c, r)
        assert np.linalg.norm(v) <= r * (1 + 1e-9)
        # the solver is exact, so the oracle can only match it from above
        assert solution.value <= value + 1e-9 * max(1.0, abs(value))
        assert value == pytest.approx(solution.value, rel=1e-5, abs=1e-7)


def test_oracle_trs_input_checks():
    with pytest.raises(InvalidRadius):
        oracle_trs(np.eye(2), [0, 0], -1.0)
    with pytest.raises(TooLarge):
        oracle_trs(np.eye(33), np.zeros(33), 1.0)


# ============== RANK RESIDUAL ==============

def test_oracle_rank_residual_diagonal():
    B = DenseMatrix(np.diag([3.0, 2.0, 1.0]))
    assert oracle_rank_residual(B, 1) == pytest.approx(5.0, rel=1e-8)
    assert oracle_rank_residual(B, 3) == pytest.approx(0.0, abs=1e-10)
    assert oracle_rank_residual(B, 0) == pytest.approx(14.0)


def test_oracle_rank_residual_matches_svd():
    rng = np.random.default_rng(7)
    B = DenseMatrix(rng.standard_normal((8, 8)))
    total = float(np.sum(B.data ** 2))
    expected = rank_residual(B, 3)
    assert oracle_rank_residual(B, 3, seed=1) == pytest.approx(expected, rel=1e-5, abs=1e-10 * total)


def test_oracle_rank_residual_checks():
    with pytest.raises(TooLarge):
        oracle_rank_residual(DenseMatrix(np.ones((33, 4))), 1)
    with pytest.raises(RankTooLarge):
        oracle_rank_residual(DenseMatrix(np.ones((3, 4))), 4)


# ============== QUADRATIC MINIMUM ==============

def test_oracle_quadmin_one_dimensional():
    P = QuadraticProblem(DenseMatrix([[2.0]]), [1.0], [-4.0])
    assert oracle_quadmin(P) == pytest.approx(-4.0 / 3.0, rel=1e-10)


def test_oracle_quadmin_no_linear_term():
    P = QuadraticProblem(DenseMatrix(np.eye(3)), [1.0, 1.0, 1.0], [0.0, 0.0, 0.0])
    assert oracle_quadmin(P) == 0.0


def test_oracle_quadmin_matches_solver():
    rng = np.random.default_rng(3)
    n = 16
    P = QuadraticProblem(DenseMatrix(rng.uniform(-1, 1, (n, n))), rng.uniform(1, 2, n), rng.uniform(-1, 1, n))
    assert oracle_quadmin(P) == pytest.approx(solve_unconstrained(P).value, rel=1e-8)


def test_oracle_quadmin_rejects_non_convex():
    P = QuadraticProblem(DenseMatrix(np.zeros((2, 2))), [1.0, -1.0], [0.0, 0.0])
    with pytest.raises(NotStronglyConvex):
        oracle_quadmin(P)


# ============== COMPARE ==============

def test_compare():
    report = compare("sigma1", 10.0, 9.5)
    assert report.abs_error == pytest.approx(0.5)
    assert report.rel_error == pytest.approx(0.05)
    small = compare("tiny", 0.1, 0.3)
    assert small.rel_error == pytest.approx(0.2)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
