from dataclasses import dataclass

from models.sample import IndexSample


@dataclass(frozen=True, eq=False)
class SvEstimate:
    """Sampled estimate of the t-th singular value.

    lambda_t / lambda_t_minus_1 are the rescaled rank residuals of the sampled
    submatrix; estimate = sqrt(max(lambda_t_minus_1 - lambda_t, 0)).
    """
    t: int
    estimate: float
    row_sample: IndexSample
    col_sample: IndexSample
    lambda_t: float
    lambda_t_minus_1: float

    @property
    def scale(self) -> float:
        """nm / (|S_R| |S_C|)"""
        r, c = self.row_sample, self.col_sample
        return (r.universe * c.universe) / (r.size * c.size)
