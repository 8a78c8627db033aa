"""Command-line front end: synth, spectrum, and decompose subcommands.

Results go to files (or stdout is never mixed in); diagnostics go to
stderr, with verbosity picked up from the PEAKDEC_LOG environment
variable (debug|info|warn). A command exits 0 only if its output files
were fully written; partially written outputs are removed on failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from peakdec.decompose import (
    DecomposeConfig,
    DecompositionResult,
    decompose,
    default_threshold,
    power_check,
)
from peakdec.detect import DETECTORS
from peakdec.signal import (
    DistortionSpec,
    SinusoidComponent,
    Spectrum,
    apply_distortion,
    forward_spectrum,
    load_samples,
    save_samples_binary,
    save_samples_csv,
    synth_multitone,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

COMPACT_FLOOR = 1e-12

_LOG_LEVELS = {"debug": logging.DEBUG, "info": logging.INFO, "warn": logging.WARNING}


def _parse_tone(text: str) -> SinusoidComponent:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"tone must be 'A,w,theta' (three comma-separated floats), got {text!r}"
        )
    try:
        amplitude, frequency, phase = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tone {text!r}: {exc}") from None
    try:
        return SinusoidComponent(amplitude=amplitude, frequency=frequency, phase=phase)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tone {text!r}: {exc}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peakdec",
        description="Decompose FFT magnitude spectra into pseudo-symmetric peaks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="write a synthetic multi-tone sample file")
    synth.add_argument("--output", required=True, help="sample file to write")
    synth.add_argument(
        "--tone",
        action="append",
        type=_parse_tone,
        default=[],
        metavar="A,w,theta",
        help="amplitude, frequency (rad/sample), phase; repeatable",
    )
    synth.add_argument("--n-samples", type=int, required=True, help="signal length N")
    synth.add_argument("--clip", type=float, help="clip samples to [-LEVEL, +LEVEL]")
    synth.add_argument("--window", choices=("rect", "hann", "hamming"), help="window shape")
    synth.add_argument("--awgn-sigma", type=float, help="additive Gaussian noise sigma")
    synth.add_argument("--seed", type=int, default=0, help="noise seed (default 0)")
    synth.add_argument("--binary", action="store_true", help="write the binary sample format")
    synth.add_argument(
        "--allow-empty", action="store_true", help="permit a zero-tone (all-zero) signal"
    )

    spectrum = sub.add_parser("spectrum", help="write the single-sided spectrum as CSV")
    spectrum.add_argument("--input", required=True, help="sample file to read")
    spectrum.add_argument("--output", required=True, help="spectrum CSV to write")

    dec = sub.add_parser("decompose", help="decompose a sample file into spectral peaks")
    dec.add_argument("--input", required=True, help="sample file to read")
    dec.add_argument("--output", required=True, help="result JSON to write")
    dec.add_argument("--detector", choices=DETECTORS, default="argmax")
    dec.add_argument("--threshold", choices=("mean", "absolute", "never"), default="mean")
    dec.add_argument("--threshold-value", type=float, help="power threshold (absolute mode)")
    dec.add_argument("--max-peaks", type=int, default=64)
    dec.add_argument(
        "--emit-plot",
        action="store_true",
        help="also write per-peak magnitude columns and a residual-trace CSV",
    )
    dec.add_argument(
        "--compact",
        action="store_true",
        help="drop peak bins below 1e-12 of the peak's largest magnitude",
    )
    return parser


def _distortion_from_args(args) -> DistortionSpec | None:
    parts = []
    if args.clip is not None:
        parts.append(DistortionSpec.clip(args.clip))
    if args.window is not None:
        parts.append(DistortionSpec.window(args.window))
    if args.awgn_sigma is not None:
        parts.append(DistortionSpec.awgn(args.awgn_sigma))
    if not parts:
        return None
    if len(parts) == 1:
        return parts[0]
    return DistortionSpec.compose(parts)


def _cmd_synth(args, written: list[Path]) -> int:
    if not args.tone and not args.allow_empty:
        raise ValueError("no --tone given; pass --allow-empty for an all-zero signal")
    ts = synth_multitone(args.tone, args.n_samples)
    spec = _distortion_from_args(args)
    if spec is not None:
        ts = apply_distortion(ts, spec, args.seed)
    out = Path(args.output)
    written.append(out)
    if args.binary:
        save_samples_binary(out, ts)
    else:
        save_samples_csv(out, ts)
    log.info("wrote %d samples to %s", ts.n, out)
    return 0


def _cmd_spectrum(args, written: list[Path]) -> int:
    ts, _ = load_samples(args.input)
    spec = forward_spectrum(ts)
    out = Path(args.output)
    written.append(out)
    lines = ["k,re,im,magnitude,power"]
    for k, value in enumerate(spec.bins):
        mag = float(abs(value))
        lines.append(
            f"{k},{float(value.real)!r},{float(value.imag)!r},{mag!r},{mag * mag!r}"
        )
    out.write_text("\n".join(lines) + "\n")
    log.info("wrote %d spectrum bins to %s", spec.k_max + 1, out)
    return 0


def _peak_bins_json(fitted: Spectrum, compact: bool) -> list[dict]:
    mags = fitted.magnitudes
    floor = COMPACT_FLOOR * float(mags.max()) if compact and mags.size else 0.0
    rows = []
    for k, value in enumerate(fitted.bins):
        if compact and abs(value) < floor:
            continue
        rows.append({"k": k, "re": float(value.real), "im": float(value.imag)})
    return rows


def _result_json(
    result: DecompositionResult, config: DecomposeConfig, threshold_value: float | None,
    compact: bool,
) -> dict:
    identity = power_check(result)
    return {
        "schema_version": SCHEMA_VERSION,
        "n_samples": result.residual.origin_length,
        "k_max": result.residual.k_max,
        "detector": config.detector,
        "threshold": {"mode": config.threshold_mode, "value": threshold_value},
        "peaks": [
            {
                "index": i,
                "k_star": peak.center,
                "b": peak.direction,
                "error": peak.error,
                "power": peak.power,
                "bins": _peak_bins_json(peak.fitted, compact),
            }
            for i, peak in enumerate(result.peaks, start=1)
        ],
        "residual_power": result.residual.power,
        "power_identity": {
            "lhs": identity.lhs,
            "rhs": identity.rhs,
            "relative_gap": identity.relative_gap,
        },
    }


def _write_plot_files(result: DecompositionResult, out: Path, written: list[Path]) -> None:
    stem = out.with_suffix("")
    peaks_path = Path(f"{stem}_peaks.csv")
    written.append(peaks_path)
    header = ["k"] + [f"peak_{i}" for i in range(1, len(result.peaks) + 1)] + ["residual"]
    lines = [",".join(header)]
    residual_mags = result.residual.magnitudes
    peak_mags = [p.fitted.magnitudes for p in result.peaks]
    for k in range(result.residual.k_max + 1):
        row = [str(k)] + [repr(float(m[k])) for m in peak_mags] + [repr(float(residual_mags[k]))]
        lines.append(",".join(row))
    peaks_path.write_text("\n".join(lines) + "\n")

    trace_path = Path(f"{stem}_residual_trace.csv")
    written.append(trace_path)
    lines = ["iteration,peak_power,residual_power"]
    for i, entry in enumerate(result.power_ledger, start=1):
        lines.append(f"{i},{entry.peak_power!r},{entry.residual_power!r}")
    trace_path.write_text("\n".join(lines) + "\n")


def _cmd_decompose(args, written: list[Path]) -> int:
    ts, _ = load_samples(args.input)
    spectrum = forward_spectrum(ts)
    config = DecomposeConfig(
        detector=args.detector,
        threshold_mode=args.threshold,
        absolute_threshold=args.threshold_value if args.threshold == "absolute" else None,
        max_peaks=args.max_peaks,
    )
    result = decompose(spectrum, config)
    if config.threshold_mode == "mean":
        threshold_value = default_threshold(spectrum)
    elif config.threshold_mode == "absolute":
        threshold_value = float(config.absolute_threshold)
    else:
        threshold_value = None
    out = Path(args.output)
    written.append(out)
    payload = _result_json(result, config, threshold_value, compact=args.compact)
    with out.open("w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    if args.emit_plot:
        _write_plot_files(result, out, written)
    log.info(
        "decomposed %s: %d peaks, residual power %.6g", args.input,
        len(result.peaks), result.residual.power,
    )
    return 0


def main(argv=None) -> int:
    level = _LOG_LEVELS.get(os.environ.get("PEAKDEC_LOG", "warn").strip().lower())
    logging.basicConfig(
        level=level if level is not None else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"synth": _cmd_synth, "spectrum": _cmd_spectrum, "decompose": _cmd_decompose}
    written: list[Path] = []
    try:
        return handlers[args.command](args, written)
    except (OSError, ValueError) as exc:
        for path in written:
            try:
                path.unlink(missing_ok=True)
            except OSError:
                pass
        print(f"peakdec {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
