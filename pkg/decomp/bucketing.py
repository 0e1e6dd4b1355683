"""
Bucket rounding of singular-vector entries
"""

import math
from typing import NamedTuple, Optional

import numpy as np

from models.decomposition import BucketingParams
from utils.config import get_config
from utils.errors import InvalidGamma

# label given to entries in the Large set; never produced by a bucket
LARGE_LABEL = np.iinfo(np.int64).min


def check_gamma(gamma: float):
    try:
        value = float(gamma)
    except (TypeError, ValueError):
        raise InvalidGamma(f"gamma must be a number, got {gamma!r}") from None
    if not 0.0 < value < 1.0:
        raise InvalidGamma(f"gamma must lie in (0, 1), got {gamma!r}")


def bucketing_params(gamma: float, n: int, m: int) -> BucketingParams:
    check_gamma(gamma)
    return BucketingParams(gamma=float(gamma), n=int(n), m=int(m))


class RoundedVector(NamedTuple):
    values: np.ndarray
    labels: np.ndarray
    large: np.ndarray


def round_vector(u, delta: float, large_threshold: float,
                 edge_tolerance: Optional[float] = None) -> RoundedVector:
    """Round |u_i| down to the lower edge of its width-delta bucket, keeping the sign.

    Entries with |u_i| >= large_threshold are Large: they round to 0 and get
    LARGE_LABEL. Other entries are labelled sign(u_i) * bucket, so entries
    with equal labels round to identical values. edge_tolerance (a fraction
    of delta) absorbs floating error for magnitudes sitting on a bucket edge.
    """
    if edge_tolerance is None:
        edge_tolerance = get_config().edge_tolerance
    u = np.asarray(u, dtype=np.float64).reshape(-1)
    magnitude = np.abs(u)
    large = magnitude >= large_threshold
    buckets = np.floor(magnitude / delta + edge_tolerance).astype(np.int64)
    signs = np.where(u < 0, -1, 1).astype(np.int64)

    labels = signs * buckets
    values = labels.astype(np.float64) * delta
    labels[large] = LARGE_LABEL
    values[large] = 0.0
    return RoundedVector(values=values, labels=labels, large=large)


def log_block_count_bound(gamma: float) -> float:
    """log of (1/gamma^10)^(3/gamma^2); the bound itself overflows floats for gamma < 0.3"""
    check_gamma(gamma)
    return 3.0 / gamma ** 2 * 10.0 * math.log(1.0 / gamma)
