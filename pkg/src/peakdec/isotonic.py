"""Order-constrained least squares over nonnegative magnitude sequences."""
from __future__ import annotations

import numpy as np

from peakdec import _kernels


def nonincreasing_lsq(targets) -> np.ndarray:
    """Unique minimizer of sum (fit_m - target_m)^2 with fit nonincreasing.

    Solved by pool-adjacent-violators: every fitted value is the mean of a
    pooled block of consecutive targets, so block sums are preserved and
    nonnegative inputs give nonnegative output. Runtime is linear in the
    sequence length (each element is merged at most once).
    """
    values = np.asarray(targets, dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise ValueError("targets must be a nonempty one-dimensional sequence")
    if not np.all(np.isfinite(values)):
        raise ValueError("targets must be finite")
    if np.any(values < 0):
        raise ValueError("targets must be nonnegative magnitudes")
    fit, _ = _kernels.pava_nonincreasing(values)
    return fit
