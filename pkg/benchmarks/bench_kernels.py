"""Benchmark the compiled kernels against the pure-numpy fallback.

Runs itself twice as a subprocess, once with PEAKDEC_NO_NUMBA=1 and once
without, times each kernel plus a full decomposition at several sizes,
and prints a side-by-side table with speedups.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 4096 65536 ...] [--repeats N]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

DEFAULT_SIZES = (4096, 65536, 262144)


def _time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_worker(sizes, repeats):
    import numpy as np

    import peakdec
    from peakdec import _kernels

    rng = np.random.default_rng(12345)
    rows = []
    for size in sizes:
        values = rng.uniform(0.0, 10.0, size)
        power = values * values
        bins = rng.standard_normal(size + 1) + 1j * rng.standard_normal(size + 1)
        spectrum = peakdec.Spectrum.from_bins(bins)
        config = peakdec.DecomposeConfig(threshold_mode="never", max_peaks=3)

        # one untimed call per kernel absorbs jit compilation
        _kernels.pava_nonincreasing(values)
        _kernels.halfband_scan(power)
        _kernels.minband_scan(power)
        _kernels.build_order(size // 2, 1, size)
        peakdec.decompose(spectrum, config)

        rows.append(
            {
                "size": size,
                "pava": _time_call(lambda: _kernels.pava_nonincreasing(values), repeats),
                "halfband": _time_call(lambda: _kernels.halfband_scan(power), repeats),
                "minband": _time_call(lambda: _kernels.minband_scan(power), repeats),
                "build_order": _time_call(
                    lambda: _kernels.build_order(size // 2, 1, size), repeats
                ),
                "decompose": _time_call(lambda: peakdec.decompose(spectrum, config), repeats),
            }
        )
    json.dump({"using_numba": peakdec.USING_NUMBA, "rows": rows}, sys.stdout)


def _spawn(no_numba, sizes, repeats):
    env = dict(os.environ)
    if no_numba:
        env["PEAKDEC_NO_NUMBA"] = "1"
    else:
        env.pop("PEAKDEC_NO_NUMBA", None)
    cmd = [sys.executable, os.path.abspath(__file__), "--worker", "--repeats", str(repeats)]
    cmd += ["--sizes"] + [str(s) for s in sizes]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


KERNELS = ("pava", "halfband", "minband", "build_order", "decompose")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_SIZES))
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        run_worker(args.sizes, args.repeats)
        return

    fast = _spawn(False, args.sizes, args.repeats)
    pure = _spawn(True, args.sizes, args.repeats)
    if not fast["using_numba"]:
        print("note: numba unavailable; both columns use the pure-numpy path\n")

    header = f"{'kernel':12s} {'size':>8s} {'numba':>12s} {'pure numpy':>12s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for fast_row, pure_row in zip(fast["rows"], pure["rows"]):
        for kernel in KERNELS:
            tf, tp = fast_row[kernel], pure_row[kernel]
            print(
                f"{kernel:12s} {fast_row['size']:>8d} {tf * 1e3:>10.3f}ms "
                f"{tp * 1e3:>10.3f}ms {tp / tf:>7.1f}x"
            )
        print()


if __name__ == "__main__":
    main()
