"""
Models package
Data models shared by every package
"""

from .matrix import DenseMatrix, SvdResult
from .sample import IndexSample
from .problem import QuadraticProblem, QuadSolution, QuadStatus, TrsSolution, TrsCase
from .estimate import SvEstimate
from .decomposition import BucketingParams, DecompositionDiagnostics, SpectralDecomposition
from .records import OracleReport, ExperimentConfig, ResultRecord

__all__ = [
    'DenseMatrix', 'SvdResult', 'IndexSample',
    'QuadraticProblem', 'QuadSolution', 'QuadStatus', 'TrsSolution', 'TrsCase',
    'SvEstimate', 'BucketingParams', 'DecompositionDiagnostics', 'SpectralDecomposition',
    'OracleReport', 'ExperimentConfig', 'ResultRecord',
]
