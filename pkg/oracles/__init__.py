"""
Oracles package
Brute-force references for spectra, TRS, rank residuals and quadratic minima
"""

from .jacobi import jacobi_eigen, oracle_spectrum
from .trs import oracle_trs
from .residual import oracle_rank_residual
from .quadmin import oracle_quadmin
from .compare import compare

__all__ = ['jacobi_eigen', 'oracle_spectrum', 'oracle_trs', 'oracle_rank_residual',
           'oracle_quadmin', 'compare']
