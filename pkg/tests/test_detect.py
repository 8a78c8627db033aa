import math

import numpy as np
import pytest

from peakdec import (
    DegenerateSpectrumWarning,
    Spectrum,
    build_index_order,
    detect_argmax,
    detect_halfband,
    detect_minband,
    exhaustive_best_fit,
    fit_pseudo_symmetric,
    sinc_leakage,
)
from peakdec import _kernels

from support import random_spectrum


def _spec(mags):
    return Spectrum.from_bins(np.asarray(mags, dtype=np.float64).astype(np.complex128))


# argmax


def test_argmax_unique_maximum():
    assert detect_argmax(_spec([0, 5, 2])) == 1


def test_argmax_tie_takes_smallest_index():
    assert detect_argmax(_spec([3, 3, 1])) == 0


def test_argmax_on_offset_sinc():
    assert detect_argmax(_spec(sinc_leakage(4.3, 8))) == 4


def test_argmax_matches_linear_scan():
    rng = np.random.default_rng(51)
    for _ in range(100):
        w = random_spectrum(rng, int(rng.integers(1, 64)))
        mags = w.magnitudes
        best = 0
        for k in range(1, len(mags)):
            if mags[k] > mags[best]:
                best = k
        assert detect_argmax(w) == best


def test_argmax_rejects_all_nan():
    with pytest.raises(ValueError):
        detect_argmax(np.full(4, np.nan, dtype=np.complex128))


# half-band recursion


def test_halfband_single_spike():
    assert detect_halfband(_spec([0, 0, 9, 0])) == 2


def test_halfband_uniform_drills_left():
    assert detect_halfband(_spec([1, 1, 1, 1])) == 0


def test_halfband_centered_peak():
    assert detect_halfband(_spec([0, 1, 4, 1, 0])) == 2


def test_halfband_against_brute_force():
    # replay the recursion with explicit window sums at every level
    def brute(power):
        lo, hi = 0, len(power) - 1
        while hi > lo:
            length = hi - lo + 1
            h = (length + 1) // 2
            sums = [power[s : s + h].sum() for s in range(lo, hi - h + 2)]
            best = lo + int(np.argmax(sums))
            lo, hi = best, best + h - 1
        return lo

    rng = np.random.default_rng(52)
    for _ in range(200):
        w = random_spectrum(rng, int(rng.integers(1, 48)))
        power = w.magnitudes**2
        assert detect_halfband(w) == brute(power)


def test_halfband_eval_count_linear():
    rng = np.random.default_rng(53)
    for k_max in (64, 256, 1024, 4096):
        w = random_spectrum(rng, k_max)
        _, evals = _kernels.halfband_scan(w.magnitudes**2)
        assert evals <= 4 * (k_max + 1)


# minimum half-power band


def test_minband_single_spike():
    assert detect_minband(_spec([0, 0, 9, 0])) == 2


def test_minband_singleton_window():
    assert detect_minband(_spec([2, 0, 0, 2])) == 0


def test_minband_uniform():
    assert detect_minband(_spec([1, 1, 1, 1])) == 0


def test_minband_against_brute_force():
    # smallest window with power >= half the total, earliest on ties,
    # then the argmax bin inside it
    def brute(power):
        total = power.sum()
        half = 0.5 * total
        n = len(power)
        best = None
        for start in range(n):
            acc = 0.0
            for end in range(start, n):
                acc += power[end]
                if acc >= half:
                    length = end - start + 1
                    if best is None or length < best[0]:
                        best = (length, start, end)
                    break
        _, start, end = best
        inside = power[start : end + 1]
        return start + int(np.argmax(inside))

    rng = np.random.default_rng(54)
    for _ in range(200):
        w = random_spectrum(rng, int(rng.integers(1, 48)))
        power = w.magnitudes**2
        assert detect_minband(w) == brute(power)


def test_minband_window_length_bound():
    rng = np.random.default_rng(55)
    for _ in range(100):
        k_max = int(rng.integers(1, 64))
        w = random_spectrum(rng, k_max)
        _, length, degenerate, _ = _kernels.minband_scan(w.magnitudes**2)
        assert not degenerate
        assert length <= (k_max + 2) / 2


def test_minband_eval_count_linear():
    rng = np.random.default_rng(56)
    for k_max in (64, 256, 1024, 4096):
        w = random_spectrum(rng, k_max)
        _, _, _, evals = _kernels.minband_scan(w.magnitudes**2)
        assert evals <= 4 * (k_max + 1)


def test_minband_zero_power_warns_and_returns_zero():
    w = Spectrum.from_bins(np.zeros(6, complex))
    with pytest.warns(DegenerateSpectrumWarning):
        assert detect_minband(w) == 0


# single-peak accuracy across detectors


@pytest.mark.parametrize("detector", [detect_argmax, detect_halfband, detect_minband])
def test_detectors_locate_single_sinc_peak(detector):
    k_max = 32
    for k_center in np.arange(0.0, k_max + 0.125, 0.25):
        w = _spec(sinc_leakage(float(k_center), k_max))
        got = detector(w)
        frac = k_center - math.floor(k_center)
        if frac == 0.5:
            # both neighbors tie in magnitude; either is nearest
            assert got in (math.floor(k_center), math.ceil(k_center))
        else:
            assert got == math.ceil(k_center - 0.5), k_center


def test_argmax_half_integer_tie_takes_lower_bin():
    for m in (0, 3, 15, 31):
        w = _spec(sinc_leakage(m + 0.5, 32))
        assert detect_argmax(w) == m


# exhaustive joint search


def test_exhaustive_on_pseudo_symmetric_input():
    mags = np.zeros(8)
    order = build_index_order(3, 1, 7).sequence
    mags[order] = np.linspace(4.0, 0.5, 8)
    w = _spec(mags)
    center, direction, peak = exhaustive_best_fit(w)
    assert peak.error <= 1e-20
    assert np.allclose(peak.fitted.bins, w.bins, atol=1e-12)


def test_exhaustive_on_single_spike():
    center, direction, peak = exhaustive_best_fit(_spec([0, 0, 7, 0, 0]))
    assert center == 2
    assert peak.error <= 1e-20


def test_exhaustive_matches_candidate_minimum():
    rng = np.random.default_rng(57)
    for _ in range(50):
        w = random_spectrum(rng, 8)
        center, direction, peak = exhaustive_best_fit(w)
        errors = {
            (c, b): fit_pseudo_symmetric(w, c, b).error
            for c in range(w.k_max + 1)
            for b in (1, -1)
        }
        assert peak.error == min(errors.values())
        # ties keep the smallest center, then b=+1
        winners = [cb for cb, e in errors.items() if e == peak.error]
        assert (center, direction) == min(winners, key=lambda cb: (cb[0], -cb[1]))


def test_exhaustive_rejects_large_instance():
    w = Spectrum.from_bins(np.ones(300, complex))
    with pytest.raises(ValueError):
        exhaustive_best_fit(w)
