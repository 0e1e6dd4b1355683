"""
Linalg package
Dense norms, eigendecomposition, SVD and power iteration
"""

from .norms import frobenius_norm, max_norm
from .spectral import (power_iteration_sigma1, singular_values, svd, symmetric_eigen,
                       top_singular_values)

__all__ = ['frobenius_norm', 'max_norm', 'symmetric_eigen', 'svd', 'singular_values',
           'power_iteration_sigma1', 'top_singular_values']
