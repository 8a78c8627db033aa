"""Central-bin detectors: three linear-time heuristics plus a small oracle.

All detectors accept a Spectrum or a raw sequence of bin values and break
every tie toward the smallest index, so decompositions stay reproducible.
"Power" always means squared bin magnitude.
"""
from __future__ import annotations

import warnings

import numpy as np

from peakdec import _kernels
from peakdec.peakfit import PeakFit, fit_pseudo_symmetric
from peakdec.signal import Spectrum

DETECTORS = ("argmax", "halfband", "minband")

EXHAUSTIVE_CAP = 256


class DegenerateSpectrumWarning(UserWarning):
    """A detector ran on a zero-power spectrum and fell back to bin 0."""


def _to_magnitudes(w) -> np.ndarray:
    if isinstance(w, Spectrum):
        return w.magnitudes
    mags = np.abs(np.asarray(w, dtype=np.complex128)).astype(np.float64)
    if mags.ndim != 1 or mags.size == 0:
        raise ValueError("need at least one bin")
    return mags


def detect_argmax(w) -> int:
    """Bin with the largest magnitude; ties go to the smallest index."""
    mags = _to_magnitudes(w)
    if np.isnan(mags).all():
        raise ValueError("spectrum is all NaN")
    return int(np.argmax(mags))


def detect_halfband(w) -> int:
    """Recursively drill into the most power containing half-band."""
    mags = _to_magnitudes(w)
    k, _ = _kernels.halfband_scan(mags * mags)
    return int(k)


def detect_minband(w) -> int:
    """Argmax bin of the smallest band holding at least half the power."""
    mags = _to_magnitudes(w)
    k, _, degenerate, _ = _kernels.minband_scan(mags * mags)
    if degenerate:
        warnings.warn(
            "zero-power spectrum; min-band detector returns bin 0",
            DegenerateSpectrumWarning,
            stacklevel=2,
        )
    return int(k)


def exhaustive_best_fit(w: Spectrum, cap: int = EXHAUSTIVE_CAP):
    """Minimum-error fit over every (center, direction) candidate.

    Quadratic in the bin count, so it is capped and meant for tests and
    diagnostics, not the decomposition loop. Ties prefer the smaller
    center, then direction +1. Returns (center, direction, PeakFit).
    """
    if w.k_max > cap:
        raise ValueError(f"k_max {w.k_max} exceeds the exhaustive-search cap {cap}")
    best = None
    for center in range(w.k_max + 1):
        for direction in (1, -1):
            fit = fit_pseudo_symmetric(w, center, direction)
            if best is None or fit.error < best.error:
                best = fit
    return best.center, best.direction, best
