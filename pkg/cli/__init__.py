"""
CLI package
Loaders, RBF kernels, the experiment runner and report files
"""

from .loaders import load_matrix, load_points, load_problem, save_matrix
from .kernels import rbf_gram, synthesize_gaussian
from .reports import (companion_csv_path, emit_report, read_report, runtime_csv_path, runtime_table,
                      summarize)
from .runner import abort_fraction, load_input, run_experiment

__all__ = ['load_matrix', 'load_points', 'load_problem', 'save_matrix', 'rbf_gram',
           'synthesize_gaussian', 'emit_report', 'read_report', 'summarize', 'companion_csv_path',
           'runtime_csv_path', 'runtime_table', 'run_experiment', 'load_input', 'abort_fraction']
