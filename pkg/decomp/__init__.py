"""
Decomp package
Structured + pseudorandom spectral decomposition and its verifiers
"""

from .bucketing import LARGE_LABEL, bucketing_params, log_block_count_bound, round_vector
from .decompose import count_blocks, decompose, verify_psd_norm, verify_str_max
from .report import decomposition_summary, write_report

__all__ = ['LARGE_LABEL', 'bucketing_params', 'round_vector', 'log_block_count_bound',
           'decompose', 'verify_psd_norm', 'verify_str_max', 'count_blocks',
           'decomposition_summary', 'write_report']
