import numpy as np

from models.matrix import DenseMatrix
from models.problem import QuadraticProblem
from models.sample import IndexSample
from sampling import restrict_matrix, restrict_vector
from utils.errors import DimensionMismatch


def evaluate_psi(P: QuadraticProblem, v) -> float:
    """<v, A v> + n <v, diag(d) v> + n <b, v>"""
    v = np.asarray(v, dtype=np.float64).reshape(-1)
    if v.size != P.n:
        raise DimensionMismatch(f"v has length {v.size}, problem has n={P.n}")
    n = P.n
    return float(v @ (P.A.data @ v) + n * np.dot(P.d, v * v) + n * np.dot(P.b, v))


def hessian_and_linear(P: QuadraticProblem):
    """H = (A + A^T)/2 + n diag(d), c = n b, so that psi(v) = v^T H v + c^T v"""
    a = P.A.data
    h = 0.5 * (a + a.T)
    h[np.diag_indices(P.n)] += P.n * P.d
    return DenseMatrix(h, copy=False), P.n * np.asarray(P.b)


def restrict_problem(P: QuadraticProblem, S: IndexSample) -> QuadraticProblem:
    """The problem psi_{|S|, A|_S, d|_S, b|_S}"""
    return QuadraticProblem(restrict_matrix(P.A, S, S), restrict_vector(P.d, S), restrict_vector(P.b, S))
