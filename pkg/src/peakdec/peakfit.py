"""Fit one pseudo-symmetric complex peak to a spectrum.

The fit reorders bin magnitudes along the chain for (center, direction),
solves the nonincreasing least-squares problem there, and reattaches the
target phases: the optimal phases under squared loss are the target
phases themselves, so only magnitudes are ever optimized.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from peakdec import _kernels
from peakdec.signal import Spectrum


@dataclass(frozen=True)
class PeakFit:
    """One fitted peak: spectrum, chain parameters, fit error, power."""

    fitted: Spectrum
    center: int
    direction: int
    error: float
    power: float


def _fit_arrays(bins: np.ndarray, mags: np.ndarray, center: int, direction: int):
    """Core fit on raw arrays; returns (z, error, pool merge count)."""
    order = _kernels.build_order(center, direction, mags.size - 1)
    fit_ordered, merges = _kernels.pava_nonincreasing(mags[order])
    zmag = np.empty_like(mags)
    zmag[order] = fit_ordered
    # Bins with zero target magnitude keep a real nonnegative fit value.
    z = zmag.astype(np.complex128)
    nonzero = mags > 0.0
    z[nonzero] = bins[nonzero] * (zmag[nonzero] / mags[nonzero])
    error = float(np.sum((zmag - mags) ** 2))
    return z, error, merges


def fit_pseudo_symmetric(w: Spectrum, center: int, direction: int) -> PeakFit:
    """Project a spectrum onto the pseudo-symmetric set for (center, direction).

    The fitted magnitudes are nonincreasing along the chain order, each
    nonzero target bin keeps its phase, and the error is the squared
    magnitude misfit (equal to the complex squared error given the phase
    choice). Fitting the output again with the same parameters returns it
    unchanged.
    """
    center = int(center)
    if not 0 <= center <= w.k_max:
        raise ValueError(f"center bin {center} outside [0, {w.k_max}]")
    if direction not in (-1, 1):
        raise ValueError(f"direction must be +1 or -1, got {direction}")
    z, error, _ = _fit_arrays(w.bins, w.magnitudes, center, direction)
    return PeakFit(
        fitted=Spectrum(z, origin_length=w.origin_length),
        center=center,
        direction=int(direction),
        error=error,
        power=float(np.sum(np.abs(z) ** 2)),
    )


def _as_bins(x) -> np.ndarray:
    return x.bins if isinstance(x, Spectrum) else np.asarray(x, dtype=np.complex128)


def fit_error(z, w) -> float:
    """Squared complex misfit sum |z_k - w_k|^2 over equal-length bins."""
    zb = _as_bins(z)
    wb = _as_bins(w)
    if zb.shape != wb.shape:
        raise ValueError(f"bin count mismatch: {zb.size} vs {wb.size}")
    return float(np.sum(np.abs(zb - wb) ** 2))
