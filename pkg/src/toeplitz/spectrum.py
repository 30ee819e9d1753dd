import time
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import svdvals

from .matrices import build_matrix
from ..config import QuadratureConstants
from ..core import toeplitz_logger
from ..core.exceptions import ArgumentError
from ..models.quadrature import QuadratureSpec
from ..models.truncation import SweepRow, ToeplitzTruncation
from ..symbols.base import BaseSymbol
from ..utils.validators import Validators


def singular_extremes(truncation: ToeplitzTruncation) -> Tuple[float, float]:
    """(sigma_min, sigma_max) of a dense truncation, numerical evidence only"""
    if truncation.N > QuadratureConstants.MAX_MATRIX_DIMENSION:
        raise ArgumentError(f"dense SVD limited to N <= {QuadratureConstants.MAX_MATRIX_DIMENSION}")
    if not np.all(np.isfinite(truncation.entries)):
        raise ArgumentError("truncation has non-finite entries")
    start = time.perf_counter()
    values = svdvals(truncation.entries)
    toeplitz_logger.log_timing("svd", (time.perf_counter() - start) * 1000.0, N=truncation.N)
    return float(values[-1]), float(values[0])


def singular_sweep(
    symbol: BaseSymbol,
    start: int,
    stop: int,
    step: int = 1,
    route: str = "auto",
    spec: Optional[QuadratureSpec] = None,
) -> List[SweepRow]:
    """Rows (N, sigma_min, sigma_max) for N = start, start + step, ..., up to and including stop"""
    start = Validators.require_positive_int(start, "start")
    stop = Validators.require_positive_int(stop, "stop")
    step = Validators.require_positive_int(step, "step")
    if stop < start:
        raise ArgumentError(f"sweep stop {stop} lies below start {start}")
    rows = []
    for n in range(start, stop + 1, step):
        sigma_min, sigma_max = singular_extremes(build_matrix(symbol, n, route, spec))
        toeplitz_logger.debug(f"N={n}: sigma_min={sigma_min:.6e}, sigma_max={sigma_max:.6e}")
        rows.append(SweepRow(n, sigma_min, sigma_max))
    return rows
