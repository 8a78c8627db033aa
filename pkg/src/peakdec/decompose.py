"""Iterative peeling of pseudo-symmetric peaks from a spectrum.

Each round detects a center bin on the current residual, fits a peak in
both directions, keeps the lower-error fit, and subtracts it. Because
each fit is an orthogonal projection, peak powers plus the final residual
power always add up to the input power, and the loop can stop after any
iteration and still return a valid partial decomposition.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from peakdec import _kernels
from peakdec.detect import DETECTORS
from peakdec.peakfit import PeakFit, _fit_arrays
from peakdec.signal import Spectrum

log = logging.getLogger(__name__)

THRESHOLD_MODES = ("mean", "absolute", "never")

DEFAULT_MAX_PEAKS = 64


@dataclass(frozen=True)
class DecomposeConfig:
    """Loop controls: detector choice, stopping rule, and peak cap."""

    detector: str = "argmax"
    threshold_mode: str = "mean"
    absolute_threshold: float | None = None
    max_peaks: int = DEFAULT_MAX_PEAKS

    def __post_init__(self):
        if self.detector not in DETECTORS:
            raise ValueError(f"unknown detector {self.detector!r}; options: {DETECTORS}")
        if self.threshold_mode not in THRESHOLD_MODES:
            raise ValueError(
                f"unknown threshold mode {self.threshold_mode!r}; options: {THRESHOLD_MODES}"
            )
        if self.threshold_mode == "absolute":
            if self.absolute_threshold is None or not self.absolute_threshold >= 0:
                raise ValueError("absolute threshold mode needs a nonnegative power value")
        elif self.absolute_threshold is not None:
            raise ValueError("absolute_threshold only applies when threshold_mode='absolute'")
        if self.max_peaks < 1:
            raise ValueError(f"max_peaks must be at least 1, got {self.max_peaks}")


@dataclass(frozen=True)
class LedgerEntry:
    """Per-iteration record: extracted power, remaining power, work done."""

    peak_power: float
    residual_power: float
    op_count: int


@dataclass(frozen=True)
class DecompositionResult:
    """Ordered peaks, final residual, per-iteration ledger, input power."""

    peaks: tuple[PeakFit, ...]
    residual: Spectrum
    power_ledger: tuple[LedgerEntry, ...]
    original_power: float


class PowerIdentity(NamedTuple):
    lhs: float
    rhs: float
    relative_gap: float


def _spectrum_power(w) -> float:
    bins = w.bins if isinstance(w, Spectrum) else np.asarray(w, dtype=np.complex128)
    return float(np.sum(np.abs(bins) ** 2))


def stop_criterion(w, p_tau: float) -> bool:
    """True once the residual power has dropped to p_tau (inclusive)."""
    return _spectrum_power(w) <= p_tau


def default_threshold(y) -> float:
    """Nonparametric power threshold: the mean bin power of the input."""
    bins = y.bins if isinstance(y, Spectrum) else np.asarray(y, dtype=np.complex128)
    return float(np.sum(np.abs(bins) ** 2)) / bins.size


def _detect_counted(detector: str, mags: np.ndarray) -> tuple[int, int]:
    """Run a detector on raw magnitudes; returns (center, evaluations)."""
    if detector == "argmax":
        return int(np.argmax(mags)), mags.size
    if detector == "halfband":
        k, evals = _kernels.halfband_scan(mags * mags)
        return int(k), int(evals)
    k, _, _, evals = _kernels.minband_scan(mags * mags)
    return int(k), int(evals)


def decompose(y: Spectrum, config: DecomposeConfig | None = None) -> DecompositionResult:
    """Peel peaks off a spectrum until the stopping rule or peak cap fires.

    The stopping threshold is fixed up front (mean mode reads it off the
    original input, never a residual) and checked before every round, so
    a zero-power input with the mean rule yields zero peaks. Runs of the
    same input and config are bit-identical, and the first r peaks never
    depend on how many more rounds follow.
    """
    if config is None:
        config = DecomposeConfig()
    bins = y.bins.copy()
    k_bins = bins.size
    original_power = float(np.sum(np.abs(bins) ** 2))
    if config.threshold_mode == "mean":
        p_tau = original_power / k_bins
    elif config.threshold_mode == "absolute":
        p_tau = float(config.absolute_threshold)
    else:
        p_tau = None

    peaks: list[PeakFit] = []
    ledger: list[LedgerEntry] = []
    for r in range(1, config.max_peaks + 1):
        mags = np.abs(bins)
        if p_tau is not None and float(np.sum(mags * mags)) <= p_tau:
            break
        center, detect_evals = _detect_counted(config.detector, mags)
        z_pos, err_pos, merges_pos = _fit_arrays(bins, mags, center, 1)
        z_neg, err_neg, merges_neg = _fit_arrays(bins, mags, center, -1)
        if err_pos <= err_neg:
            z, error, direction = z_pos, err_pos, 1
        else:
            z, error, direction = z_neg, err_neg, -1
        bins -= z
        ops = int(detect_evals) + int(merges_pos) + int(merges_neg) + k_bins
        peak_power = float(np.sum(np.abs(z) ** 2))
        residual_power = float(np.sum(np.abs(bins) ** 2))
        peaks.append(
            PeakFit(
                fitted=Spectrum(z, origin_length=y.origin_length),
                center=center,
                direction=direction,
                error=error,
                power=peak_power,
            )
        )
        ledger.append(
            LedgerEntry(peak_power=peak_power, residual_power=residual_power, op_count=ops)
        )
        log.debug(
            "peak %d: center=%d direction=%+d error=%.6g residual_power=%.6g",
            r, center, direction, error, residual_power,
        )
    return DecompositionResult(
        peaks=tuple(peaks),
        residual=Spectrum(bins, origin_length=y.origin_length),
        power_ledger=tuple(ledger),
        original_power=original_power,
    )


def power_check(result: DecompositionResult) -> PowerIdentity:
    """Both sides of the power preservation identity and their relative gap.

    lhs is the sum of extracted peak powers plus the final residual power;
    rhs is the input power. The gap stays within accumulated float error
    (about 1e-9 relative) because every fit is orthogonal to its residual.
    """
    lhs = sum(p.power for p in result.peaks) + result.residual.power
    rhs = result.original_power
    scale = max(abs(lhs), abs(rhs))
    gap = abs(lhs - rhs) / scale if scale > 0 else 0.0
    return PowerIdentity(lhs=lhs, rhs=rhs, relative_gap=gap)
