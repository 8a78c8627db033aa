"""Decompose FFT magnitude spectra into pseudo-symmetric spectral peaks.

A pseudo-symmetric peak is a set of spectrum magnitudes that decay
monotonically when the bins are walked outward from a central bin,
alternating sides. Fitting one peak is an order-constrained least
squares problem solved exactly by pool-adjacent-violators; a full
decomposition peels peaks off the residual one at a time until the
leftover power drops below a threshold.

The package exposes:

- signal synthesis, distortion, file IO, and FFT helpers (`signal`),
- the interleaved index-order construction (`order`),
- nonincreasing least squares (`isotonic`),
- single-peak fitting (`peakfit`),
- central-bin detectors (`detect`),
- the iterative decomposition driver (`decompose`),
- a command-line interface (`cli`, installed as ``peakdec``).

Hot kernels are compiled with numba when it is available; set the
environment variable ``PEAKDEC_NO_NUMBA=1`` to force the pure-numpy
fallback (both paths produce bit-identical results).
"""
from peakdec._kernels import USING_NUMBA
from peakdec.decompose import (
    DEFAULT_MAX_PEAKS,
    THRESHOLD_MODES,
    DecomposeConfig,
    DecompositionResult,
    LedgerEntry,
    PowerIdentity,
    decompose,
    default_threshold,
    power_check,
    stop_criterion,
)
from peakdec.detect import (
    DETECTORS,
    DegenerateSpectrumWarning,
    detect_argmax,
    detect_halfband,
    detect_minband,
    exhaustive_best_fit,
)
from peakdec.isotonic import nonincreasing_lsq
from peakdec.order import IndexOrder, build_index_order
from peakdec.peakfit import PeakFit, fit_error, fit_pseudo_symmetric
from peakdec.signal import (
    DistortionSpec,
    SinusoidComponent,
    Spectrum,
    TimeSeries,
    apply_distortion,
    forward_spectrum,
    load_samples,
    save_samples_binary,
    save_samples_csv,
    sinc_leakage,
    synth_multitone,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_PEAKS",
    "DETECTORS",
    "THRESHOLD_MODES",
    "USING_NUMBA",
    "DecomposeConfig",
    "DecompositionResult",
    "DegenerateSpectrumWarning",
    "DistortionSpec",
    "IndexOrder",
    "LedgerEntry",
    "PeakFit",
    "PowerIdentity",
    "SinusoidComponent",
    "Spectrum",
    "TimeSeries",
    "apply_distortion",
    "build_index_order",
    "decompose",
    "default_threshold",
    "detect_argmax",
    "detect_halfband",
    "detect_minband",
    "exhaustive_best_fit",
    "fit_error",
    "fit_pseudo_symmetric",
    "forward_spectrum",
    "load_samples",
    "nonincreasing_lsq",
    "power_check",
    "save_samples_binary",
    "save_samples_csv",
    "sinc_leakage",
    "stop_criterion",
    "synth_multitone",
    "__version__",
]
