"""
Decomposition report export
"""

import json
import logging
import os
from dataclasses import asdict

from models.decomposition import SpectralDecomposition
from utils.errors import ReportWriteError

logger = logging.getLogger(__name__)


def decomposition_summary(D: SpectralDecomposition) -> dict:
    diagnostics = asdict(D.diagnostics)
    return {
        'gamma': D.gamma,
        'kept_rank': D.kept_rank,
        'shape': list(D.a_str.shape),
        'row_cell_sizes': {str(cell): size for cell, size in D.row_cell_sizes.items()},
        'col_cell_sizes': {str(cell): size for cell, size in D.col_cell_sizes.items()},
        'block_count': diagnostics.pop('block_count'),
        'verdicts': {
            'psd_norm': {'value': diagnostics.pop('psd_spectral_norm'),
                         'bound': diagnostics.pop('psd_bound'),
                         'ok': diagnostics.pop('psd_ok')},
            'str_max': {'value': diagnostics.pop('str_max_norm'),
                        'bound': diagnostics.pop('str_bound'),
                        'ok': diagnostics.pop('str_ok')},
        },
        'diagnostics': diagnostics,
    }


def write_report(D: SpectralDecomposition, path: str):
    """Write the decomposition summary as indented JSON"""
    try:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(decomposition_summary(D), f, indent=2)
    except OSError as e:
        raise ReportWriteError(f"cannot write decomposition report {path}: {e}") from e
    logger.info("decomposition report written to %s", path)
