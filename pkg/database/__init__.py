"""
Database package
Archive of experiment runs
"""

from .results_db import ResultDatabase

__all__ = ['ResultDatabase']
