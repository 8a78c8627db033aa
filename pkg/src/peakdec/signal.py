"""Multi-tone synthesis, observation distortions, and single-sided spectra.

Frequencies are in radians per sample, so a tone at ``2*pi*k0/n`` lands
exactly on FFT bin ``k0``. Spectra keep the raw complex DFT bins 0..K with
K = floor(N/2); no one-sided amplitude rescaling is applied.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

SAMPLE_MAGIC = b"PKDC0001"

WINDOW_SHAPES = ("rect", "hann", "hamming")


@dataclass(frozen=True)
class SinusoidComponent:
    """One cosine tone: amplitude * cos(frequency * n + phase)."""

    amplitude: float
    frequency: float
    phase: float = 0.0

    def __post_init__(self):
        values = (self.amplitude, self.frequency, self.phase)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("sinusoid parameters must be finite")
        if self.amplitude < 0:
            raise ValueError(f"amplitude must be nonnegative, got {self.amplitude}")
        if not 0.0 <= self.frequency <= math.pi:
            raise ValueError(
                f"frequency must lie in [0, pi] radians/sample, got {self.frequency}"
            )


@dataclass(frozen=True)
class TimeSeries:
    """Immutable real-valued sample vector of length >= 2."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.float64, copy=True)
        if samples.ndim != 1:
            raise ValueError("samples must be one-dimensional")
        if samples.size < 2:
            raise ValueError(f"need at least 2 samples, got {samples.size}")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)

    @property
    def n(self) -> int:
        return self.samples.size


@dataclass(frozen=True)
class Spectrum:
    """Single-sided complex spectrum: bins 0..K, K = floor(origin_length/2)."""

    bins: np.ndarray
    origin_length: int

    def __post_init__(self):
        bins = np.array(self.bins, dtype=np.complex128, copy=True)
        n = int(self.origin_length)
        if bins.ndim != 1:
            raise ValueError("bins must be one-dimensional")
        if n < 2:
            raise ValueError(f"origin_length must be at least 2, got {n}")
        if bins.size != n // 2 + 1:
            raise ValueError(
                f"expected {n // 2 + 1} bins for origin_length={n}, got {bins.size}"
            )
        if not np.all(np.isfinite(bins)):
            raise ValueError("spectrum bins must be finite")
        bins.flags.writeable = False
        object.__setattr__(self, "bins", bins)
        object.__setattr__(self, "origin_length", n)

    @classmethod
    def from_bins(cls, bins) -> "Spectrum":
        """Wrap raw bins, assuming an even origin length N = 2K."""
        bins = np.asarray(bins)
        return cls(bins, origin_length=2 * (bins.size - 1))

    @property
    def k_max(self) -> int:
        return self.bins.size - 1

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.bins)

    @property
    def power(self) -> float:
        """Total bin power, sum |Y_k|^2."""
        return float(np.sum(np.abs(self.bins) ** 2))


@dataclass(frozen=True)
class DistortionSpec:
    """Observation-path distortion: clip, window, awgn, or an ordered compose.

    Build instances through the classmethod factories; ``apply_distortion``
    interprets them.
    """

    kind: str
    level: float | None = None
    shape: str | None = None
    coefficients: tuple[float, ...] | None = None
    sigma: float | None = None
    parts: tuple["DistortionSpec", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("clip", "window", "awgn", "compose"):
            raise ValueError(f"unknown distortion kind {self.kind!r}")
        if self.kind == "clip" and not (self.level is not None and self.level > 0):
            raise ValueError("clip level must be positive")
        if self.kind == "awgn" and not (self.sigma is not None and self.sigma >= 0):
            raise ValueError("noise sigma must be nonnegative")
        if self.kind == "window":
            if (self.shape is None) == (self.coefficients is None):
                raise ValueError("window takes either a shape name or explicit coefficients")
            if self.shape is not None and self.shape not in WINDOW_SHAPES:
                raise ValueError(f"unknown window shape {self.shape!r}; options: {WINDOW_SHAPES}")

    @classmethod
    def clip(cls, level: float) -> "DistortionSpec":
        return cls(kind="clip", level=float(level))

    @classmethod
    def window(cls, shape: str) -> "DistortionSpec":
        return cls(kind="window", shape=shape)

    @classmethod
    def window_coefficients(cls, coefficients) -> "DistortionSpec":
        return cls(kind="window", coefficients=tuple(float(c) for c in coefficients))

    @classmethod
    def awgn(cls, sigma: float) -> "DistortionSpec":
        return cls(kind="awgn", sigma=float(sigma))

    @classmethod
    def compose(cls, parts) -> "DistortionSpec":
        return cls(kind="compose", parts=tuple(parts))


def synth_multitone(components, n_samples: int) -> TimeSeries:
    """Sum of cosine tones evaluated at n = 0..n_samples-1.

    An empty component list yields the all-zero signal. Components may be
    SinusoidComponent instances or (amplitude, frequency, phase) tuples;
    an invalid entry is rejected with its list index.
    """
    n_samples = int(n_samples)
    if n_samples < 2:
        raise ValueError(f"n_samples must be at least 2, got {n_samples}")
    n = np.arange(n_samples, dtype=np.float64)
    out = np.zeros(n_samples, dtype=np.float64)
    for i, comp in enumerate(components):
        try:
            if not isinstance(comp, SinusoidComponent):
                comp = SinusoidComponent(*comp)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"component {i}: {exc}") from exc
        out += comp.amplitude * np.cos(comp.frequency * n + comp.phase)
    return TimeSeries(out)


def _window_taps(spec: DistortionSpec, n: int) -> np.ndarray:
    if spec.coefficients is not None:
        taps = np.asarray(spec.coefficients, dtype=np.float64)
        if taps.size != n:
            raise ValueError(
                f"window has {taps.size} coefficients but the signal has {n} samples"
            )
        return taps
    if spec.shape == "rect":
        return np.ones(n)
    if spec.shape == "hann":
        return np.hanning(n)
    return np.hamming(n)


def _apply(samples: np.ndarray, spec: DistortionSpec, rng: np.random.Generator) -> np.ndarray:
    if spec.kind == "clip":
        return np.clip(samples, -spec.level, spec.level)
    if spec.kind == "window":
        return samples * _window_taps(spec, samples.size)
    if spec.kind == "awgn":
        return samples + rng.normal(0.0, spec.sigma, samples.size)
    out = samples
    for part in spec.parts:
        out = _apply(out, part, rng)
    return out


def apply_distortion(ts: TimeSeries, spec: DistortionSpec, seed: int) -> TimeSeries:
    """Run the observation distortion over a signal.

    Noise draws come from a generator seeded once with ``seed`` and
    consumed in composition order, so results are bit-reproducible per
    seed with no global RNG state involved.
    """
    rng = np.random.default_rng(seed)
    return TimeSeries(_apply(ts.samples, spec, rng))


def forward_spectrum(ts: TimeSeries) -> Spectrum:
    """Single-sided DFT of a real signal (FFT-backed, O(N log N))."""
    return Spectrum(np.fft.rfft(ts.samples), origin_length=ts.n)


def sinc_leakage(k_center: float, k_max: int) -> np.ndarray:
    """Magnitude leakage pattern of a rectangular-window tone at ``k_center``.

    Entry k equals |sin(pi (k - k_center)) / (pi (k - k_center))| with the
    removable singularity at k_center evaluating to 1. A bin-centered tone
    (integer k_center) collapses to a single-bin spike.
    """
    k_max = int(k_max)
    if k_max < 1:
        raise ValueError("k_max must be a positive integer")
    if not 0 <= k_center <= k_max:
        raise ValueError(f"k_center {k_center} outside [0, {k_max}]")
    return np.abs(np.sinc(np.arange(k_max + 1) - k_center))


_RATE_HEADER = re.compile(r"^#\s*sample_rate\s*=\s*(\S+)\s*$")


def load_samples(path) -> tuple[TimeSeries, float | None]:
    """Read a sample file, CSV or binary (sniffed by magic header).

    CSV holds one real sample per line with an optional
    ``# sample_rate=<float>`` header; other ``#`` lines are comments.
    Returns the series and the sample rate if one was declared.
    """
    path = Path(path)
    data = path.read_bytes()
    if data[:8] == SAMPLE_MAGIC:
        payload = data[8:]
        if len(payload) % 8 != 0:
            raise ValueError(f"{path}: truncated binary sample payload")
        return TimeSeries(np.frombuffer(payload, dtype="<f8")), None
    sample_rate = None
    values = []
    for lineno, raw in enumerate(data.decode("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _RATE_HEADER.match(line)
            if m:
                try:
                    sample_rate = float(m.group(1))
                except ValueError as exc:
                    raise ValueError(f"{path}: line {lineno}: bad sample_rate") from exc
            continue
        try:
            values.append(float(line))
        except ValueError as exc:
            raise ValueError(f"{path}: line {lineno}: not a number: {line!r}") from exc
    if not values:
        raise ValueError(f"{path}: no samples")
    return TimeSeries(np.asarray(values)), sample_rate


def save_samples_csv(path, ts: TimeSeries, sample_rate: float | None = None) -> None:
    """Write one sample per line; floats keep full round-trip precision."""
    lines = []
    if sample_rate is not None:
        lines.append(f"# sample_rate={sample_rate!r}")
    lines.extend(repr(float(x)) for x in ts.samples)
    Path(path).write_text("\n".join(lines) + "\n")


def save_samples_binary(path, ts: TimeSeries) -> None:
    """Write the magic header plus little-endian float64 samples."""
    Path(path).write_bytes(SAMPLE_MAGIC + ts.samples.astype("<f8").tobytes())
