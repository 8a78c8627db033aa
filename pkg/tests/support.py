"""Shared helpers for building randomized test inputs."""
from __future__ import annotations

import numpy as np

from peakdec import Spectrum


def random_spectrum(rng: np.random.Generator, k_max: int) -> Spectrum:
    """Complex spectrum with i.i.d. standard normal real and imag parts."""
    bins = rng.standard_normal(k_max + 1) + 1j * rng.standard_normal(k_max + 1)
    return Spectrum.from_bins(bins)


def random_magnitudes(rng: np.random.Generator, size: int, tie_rate: float = 0.1) -> np.ndarray:
    """Nonnegative magnitude sequence with a sprinkle of exact ties."""
    values = rng.uniform(0.0, 10.0, size)
    if size >= 2 and tie_rate > 0.0:
        dup = rng.random(size - 1) < tie_rate
        values[1:][dup] = values[:-1][dup]
    return values
