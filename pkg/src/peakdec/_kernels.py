"""Hot inner loops behind the fitting and detection modules.

Every kernel is a plain nopython-compatible function over numpy arrays.
When numba is importable and ``PEAKDEC_NO_NUMBA`` is unset (or "0"), the
kernels are compiled with ``@njit``; otherwise the same functions run
uncompiled on numpy arrays. Both paths execute the identical statements in
the identical order, so results are bit-for-bit equal. ``USING_NUMBA``
reports which path is active for the current process.

Each kernel also returns an operation counter (pool merges, window
evaluations) so callers can audit the linear-per-peak cost claim.
"""
from __future__ import annotations

import os

import numpy as np


def _jit_enabled() -> bool:
    if os.environ.get("PEAKDEC_NO_NUMBA", "").strip() not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USING_NUMBA = _jit_enabled()


def _pava_nonincreasing(values):
    """Least-squares nonincreasing fit via pool-adjacent-violators.

    Maintains a stack of (sum, length) blocks; a new element is pushed as
    its own block and merged backward while its block mean exceeds the one
    below. Equal adjacent means are left unpooled. Returns the fitted
    array and the number of merge events (at most len(values) - 1).
    """
    n = values.shape[0]
    block_sum = np.empty(n, np.float64)
    block_len = np.empty(n, np.int64)
    block_mean = np.empty(n, np.float64)
    top = -1
    merges = 0
    for i in range(n):
        top += 1
        block_sum[top] = values[i]
        block_len[top] = 1
        block_mean[top] = values[i]
        while top > 0 and block_mean[top] > block_mean[top - 1]:
            block_sum[top - 1] += block_sum[top]
            block_len[top - 1] += block_len[top]
            block_mean[top - 1] = block_sum[top - 1] / block_len[top - 1]
            top -= 1
            merges += 1
    out = np.empty(n, np.float64)
    pos = 0
    for j in range(top + 1):
        for _ in range(block_len[j]):
            out[pos] = block_mean[j]
            pos += 1
    return out, merges


def _build_order(center, direction, k_max):
    """Interleaved index order for a pseudo-symmetric chain.

    Emits ``center``, then indices at increasing distance, the
    ``direction`` side first at each distance; out-of-range indices are
    skipped, which makes the sequence continue monotonically on the
    surviving side once a boundary has been passed.
    """
    n = k_max + 1
    out = np.empty(n, np.int64)
    out[0] = center
    pos = 1
    dist = 1
    while pos < n:
        hi = center + dist * direction
        lo = center - dist * direction
        if 0 <= hi <= k_max:
            out[pos] = hi
            pos += 1
        if 0 <= lo <= k_max:
            out[pos] = lo
            pos += 1
        dist += 1
    return out


def _halfband_scan(power):
    """Recursive most-power-containing half-band search.

    At each level slides a ceil(len/2) window across the current band
    (running-sum update, one add/sub per step), recurses into the best
    window, and stops at a single bin. Ties keep the leftmost window.
    Returns (bin index, number of window evaluations); the halving makes
    the total evaluation count linear in the band length.
    """
    lo = 0
    hi = power.shape[0] - 1
    evals = 0
    while hi > lo:
        length = hi - lo + 1
        h = (length + 1) // 2
        s = 0.0
        for i in range(lo, lo + h):
            s += power[i]
        evals += 1
        best = s
        best_start = lo
        for start in range(lo + 1, hi - h + 2):
            s += power[start + h - 1] - power[start - 1]
            evals += 1
            if s > best:
                best = s
                best_start = start
        lo = best_start
        hi = best_start + h - 1
    return lo, evals


def _minband_scan(power):
    """Smallest window holding at least half the total power.

    Two-pointer sweep: for each start index, grow the end pointer until
    the window power reaches half the total, record the window length,
    then drop the start bin and continue. The globally smallest window
    wins (ties keep the smallest start); the returned bin is the window's
    power argmax (ties keep the smallest index). Returns
    (bin, window length, degenerate, pointer advances); a zero-power
    spectrum is flagged degenerate and maps to bin 0.
    """
    n = power.shape[0]
    total = 0.0
    for i in range(n):
        total += power[i]
    if total <= 0.0:
        return 0, 0, True, n
    half = 0.5 * total
    best_len = n + 1
    best_start = 0
    end = 0
    s = 0.0
    evals = 0
    for start in range(n):
        while end < n and s < half:
            s += power[end]
            end += 1
            evals += 1
        if s < half:
            break
        wlen = end - start
        if wlen < best_len:
            best_len = wlen
            best_start = start
        s -= power[start]
    k = best_start
    p_best = power[best_start]
    for j in range(best_start + 1, best_start + best_len):
        if power[j] > p_best:
            p_best = power[j]
            k = j
    return k, best_len, False, evals


if USING_NUMBA:
    from numba import njit

    pava_nonincreasing = njit(cache=True)(_pava_nonincreasing)
    build_order = njit(cache=True)(_build_order)
    halfband_scan = njit(cache=True)(_halfband_scan)
    minband_scan = njit(cache=True)(_minband_scan)
else:
    pava_nonincreasing = _pava_nonincreasing
    build_order = _build_order
    halfband_scan = _halfband_scan
    minband_scan = _minband_scan
