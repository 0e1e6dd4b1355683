import numpy as np

from models.matrix import DenseMatrix


def frobenius_norm(A: DenseMatrix) -> float:
    return float(np.linalg.norm(A.data, 'fro'))


def max_norm(A: DenseMatrix) -> float:
    return float(np.abs(A.data).max())
