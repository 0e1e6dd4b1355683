#!/usr/bin/env python3
"""
Tests for Bernoulli index sampling and restriction
"""

import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from linalg import singular_values
from models.matrix import DenseMatrix
from models.sample import IndexSample
from sampling import checked_sample, oversize_guard, restrict_matrix, restrict_vector, sample_indices
from utils.errors import IndexOutOfRange, InvalidRate, SamplingAborted
from utils.rng import RNG_ID, make_rng, normalize_seed


def _sample(universe, indices, k=1):
    return IndexSample(universe=universe, rate_numerator=k, indices=np.asarray(indices, dtype=np.int64), seed=0)


def test_sample_is_deterministic():
    first = sample_indices(1000, 100, seed=42)
    second = sample_indices(1000, 100, seed=42)
    assert first == second
    assert sample_indices(1000, 100, seed=43) != first


def test_sample_indices_sorted_and_in_range():
    S = sample_indices(500, 50, seed=7)
    assert np.all(np.diff(S.indices) > 0)
    assert S.indices.min() >= 0 and S.indices.max() < 500
    assert S.rate == pytest.approx(0.1)
    assert len(S) == S.size


def test_full_rate_keeps_everything():
    S = sample_indices(37, 37, seed=123)
    np.testing.assert_array_equal(S.indices, np.arange(37))


def test_invalid_rate():
    with pytest.raises(InvalidRate):
        sample_indices(10, 0, seed=0)
    with pytest.raises(InvalidRate):
        sample_indices(10, 11, seed=0)
    with pytest.raises(InvalidRate):
        sample_indices(0, 1, seed=0)


def test_oversize_guard():
    assert oversize_guard(_sample(100, range(20), k=10), 10)
    assert not oversize_guard(_sample(100, range(21), k=10), 10)
    assert oversize_guard(_sample(100, range(21), k=10), 10, factor=3)


def test_checked_sample_aborts_on_oversize():
    oversize = [seed for seed in range(300) if sample_indices(10, 1, seed).size > 2]
    assert oversize, "expected some oversize draws at rate 1/10"
    with pytest.raises(SamplingAborted) as info:
        checked_sample(10, 1, oversize[0])
    assert info.value.cap == 2
    assert info.value.sample.size > 2


def test_checked_sample_aborts_on_empty():
    empty = [seed for seed in range(300) if sample_indices(10, 1, seed).size == 0]
    assert empty
    with pytest.raises(SamplingAborted, match="empty"):
        checked_sample(10, 1, empty[0])


def test_restrict_matrix():
    a = np.arange(20, dtype=float).reshape(4, 5)
    sub = restrict_matrix(DenseMatrix(a), _sample(4, [0, 2]), _sample(5, [1, 4]))
    np.testing.assert_array_equal(sub.data, [[1.0, 4.0], [11.0, 14.0]])


def test_restrict_out_of_range():
    A = DenseMatrix(np.ones((4, 5)))
    with pytest.raises(IndexOutOfRange):
        restrict_matrix(A, _sample(10, [0, 9]), _sample(5, [0]))
    with pytest.raises(IndexOutOfRange):
        restrict_vector(np.ones(3), _sample(10, [5]))


def test_restrict_vector():
    np.testing.assert_array_equal(restrict_vector([5.0, 6.0, 7.0, 8.0], _sample(4, [1, 3])), [6.0, 8.0])


def fair_share_bound(A, k_rows, k_cols):
    n, m = A.shape
    top = singular_values(A)[0]
    return (3.0 * k_rows * k_cols / (n * m) * top ** 2 + 2.0 * k_rows * math.log(n)
            + 2.0 * k_cols * math.log(m) + math.log(n) * math.log(m))


@pytest.mark.parametrize("kind", ["signs", "ones"])
def test_sampled_spectral_norm_gets_fair_share(kind):
    n = m = 512
    k = 128
    if kind == "signs":
        A = DenseMatrix(np.random.default_rng(17).choice([-1.0, 1.0], (n, m)))
    else:
        A = DenseMatrix(np.ones((n, m)))
    squares = []
    for seed in range(50):
        rows = sample_indices(n, k, 2 * seed)
        cols = sample_indices(m, k, 2 * seed + 1)
        squares.append(singular_values(restrict_matrix(A, rows, cols))[0] ** 2)
    assert np.mean(squares) <= fair_share_bound(A, k, k)


def test_rng_contract():
    assert RNG_ID == "numpy-philox4x64-v1"
    assert normalize_seed(-1) == 2 ** 64 - 1
    np.testing.assert_array_equal(make_rng(9).random(4), make_rng(9).random(4))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
