"""Command-line entry points.

Subcommands: ``certify`` (dual-distance certificate for a named code or a
generator file), ``run`` (batch experiment from a JSON config), ``plot``
(SVG from an eigenvalue CSV), ``rate`` (convergence-rate fit from summary
files).  Exit codes: 0 success, 1 certification failure, 2 invalid
config/arguments, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .codes import DualTooLargeError, build_named, dual_distance_at_least
from .eigen import ConvergenceError, NonHermitianError
from .gf import modulus_from_string
from .harness import (
    CertificationError,
    ExperimentConfig,
    InvalidConfigError,
    fit_rate_from_summaries,
    run_experiment,
)
from .svgplot import plot_esd

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


def _cmd_certify(args) -> int:
    modulus = modulus_from_string(args.modulus) if args.modulus else None
    code = build_named(args.code, modulus)
    cert = dual_distance_at_least(code, args.threshold)
    if cert.holds:
        print(f"{code.name}: [{code.n},{code.k}]_{code.spec.q} "
              f"dual distance >= {args.threshold}: OK")
        return EXIT_OK
    w = cert.witness
    print(f"{code.name}: [{code.n},{code.k}]_{code.spec.q} "
          f"dual distance >= {args.threshold}: FAILED")
    print(f"  witness: weight {w.weight}, support {list(w.support)}, "
          f"coefficients {list(w.coeffs)}")
    return EXIT_CERTIFICATION


def _cmd_run(args) -> int:
    cfg = ExperimentConfig.from_json(args.config)
    if args.allow_uncertified:
        cfg.allow_uncertified = True
    if args.large:
        cfg.large = True
    if args.workers is not None:
        cfg.workers = args.workers
    if args.output_dir is not None:
        cfg.output_dir = args.output_dir
    cfg.validate()
    reports = run_experiment(cfg)
    print(f"wrote {len(reports)} trial rows to {cfg.output_dir}/summary.csv")
    return EXIT_OK


def _cmd_plot(args) -> int:
    mode = "density" if args.density else "cdf"
    out = args.output or (args.esd.rsplit(".", 1)[0] + ".svg")
    plot_esd(args.esd, out, mode=mode)
    print(f"wrote {out}")
    return EXIT_OK


def _cmd_rate(args) -> int:
    fit = fit_rate_from_summaries(args.summaries)
    print("n        p     trials  median_sup      IQR")
    for g in fit.groups:
        print(f"{g.n:<8d} {g.p:<5d} {g.trials:<7d} {g.median:<15.6g} "
              f"[{g.q1:.6g}, {g.q3:.6g}]")
    print(f"fitted decay exponent beta_hat = {fit.beta_hat:.6g} "
          f"(log-log slope {fit.slope:.6g})")
    print(f"fitted p ~ n^gamma with gamma_hat = {fit.gamma_hat:.6g}; "
          f"theoretical benchmark min(gamma/4, (1-gamma)/8) = {fit.benchmark_beta:.6g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codespectra",
        description="Spectra of random matrices built from linear codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cert = sub.add_parser("certify", help="check the dual-distance certificate")
    cert.add_argument("code", help="gold:m=5, gold+1:m=5, rm1:m=4, or a matrix file")
    cert.add_argument("--threshold", type=int, default=5,
                      help="certify dual distance >= this value (max 5)")
    cert.add_argument("--modulus", help="field modulus override, e.g. 1,0,1,0,0,1")
    cert.set_defaults(func=_cmd_certify)

    run = sub.add_parser("run", help="run an experiment from a JSON config")
    run.add_argument("config", help="path to the experiment config")
    run.add_argument("--allow-uncertified", action="store_true",
                     help="run even if the certificate fails")
    run.add_argument("--large", action="store_true",
                     help="allow m >= 13 (long codeword synthesis)")
    run.add_argument("--workers", type=int, default=None,
                     help="trial worker processes (default: config value)")
    run.add_argument("--output-dir", default=None)
    run.set_defaults(func=_cmd_run)

    plot = sub.add_parser("plot", help="render an eigenvalue CSV as SVG")
    plot.add_argument("esd", help="esd_<n>_<p>_<trial>.csv file")
    plot.add_argument("-o", "--output", default=None)
    plot.add_argument("--density", action="store_true",
                      help="histogram-density view instead of the CDF overlay")
    plot.set_defaults(func=_cmd_plot)

    rate = sub.add_parser("rate", help="fit the convergence rate from summaries")
    rate.add_argument("summaries", nargs="+", help="summary.csv files")
    rate.set_defaults(func=_cmd_rate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (ConvergenceError, NonHermitianError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InvalidConfigError, DualTooLargeError, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
