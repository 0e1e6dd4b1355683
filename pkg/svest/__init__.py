"""
Svest package
Sampled singular-value estimators and rank residuals
"""

from .residual import rank_residual, residual_profile
from .estimators import draw_samples, estimate_sigma1, estimate_sigma_t, estimate_top_spectrum

__all__ = ['rank_residual', 'residual_profile', 'draw_samples', 'estimate_sigma1',
           'estimate_sigma_t', 'estimate_top_spectrum']
