"""
Sampling package
Bernoulli index samples and restrictions
"""

from .index_sample import (checked_sample, oversize_guard, restrict_matrix, restrict_vector,
                           sample_indices)

__all__ = ['sample_indices', 'oversize_guard', 'checked_sample', 'restrict_matrix',
           'restrict_vector']
