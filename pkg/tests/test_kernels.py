import os
import subprocess
import sys

import numpy as np
import pytest

from peakdec import _kernels

from support import random_magnitudes

PROBE = (
    "import peakdec, numpy as np;"
    "fit, merges = peakdec._kernels.pava_nonincreasing(np.array([1.0, 3.0, 2.0]));"
    "print(peakdec.USING_NUMBA, [float(v) for v in fit])"
)


def _run_probe(env_value):
    env = dict(os.environ)
    env.pop("PEAKDEC_NO_NUMBA", None)
    if env_value is not None:
        env["PEAKDEC_NO_NUMBA"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, check=True
    )
    return out.stdout.strip()


def _numba_available():
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def test_fallback_flag_disables_numba():
    assert _run_probe("1") == "False [2.0, 2.0, 2.0]"


@pytest.mark.skipif(not _numba_available(), reason="numba not installed")
def test_unset_flag_uses_numba():
    assert _run_probe(None) == "True [2.0, 2.0, 2.0]"


@pytest.mark.skipif(not _numba_available(), reason="numba not installed")
def test_zero_and_empty_flag_values_keep_numba():
    assert _run_probe("0").startswith("True")
    assert _run_probe("").startswith("True")


def test_pava_paths_bit_identical():
    rng = np.random.default_rng(71)
    for _ in range(100):
        values = random_magnitudes(rng, int(rng.integers(1, 300)))
        fit_fast, merges_fast = _kernels.pava_nonincreasing(values)
        fit_pure, merges_pure = _kernels._pava_nonincreasing(values)
        assert np.array_equal(fit_fast, fit_pure)
        assert merges_fast == merges_pure


def test_build_order_paths_bit_identical():
    rng = np.random.default_rng(72)
    for _ in range(200):
        k_max = int(rng.integers(1, 200))
        center = int(rng.integers(0, k_max + 1))
        direction = 1 if rng.random() < 0.5 else -1
        fast = _kernels.build_order(center, direction, k_max)
        pure = _kernels._build_order(center, direction, k_max)
        assert np.array_equal(fast, pure)


def test_detector_scans_bit_identical():
    rng = np.random.default_rng(73)
    for _ in range(100):
        power = random_magnitudes(rng, int(rng.integers(1, 300))) ** 2
        assert _kernels.halfband_scan(power) == _kernels._halfband_scan(power)
        assert _kernels.minband_scan(power) == _kernels._minband_scan(power)


def test_pava_merge_count_bound():
    rng = np.random.default_rng(74)
    for _ in range(50):
        values = random_magnitudes(rng, int(rng.integers(2, 500)))
        _, merges = _kernels.pava_nonincreasing(values)
        assert 0 <= merges < len(values)
