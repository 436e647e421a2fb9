"""Batch experiment driver: sample, solve, score, and write CSV artifacts.

A run walks a list of (m, p) pairs for a named code family (or a single
generator-matrix file), draws ``trials`` matrices per pair, and records one
summary row per trial plus one eigenvalue file per matrix.  Everything that
lands in summary.csv is a pure function of the configuration and the master
seed, so identical runs produce byte-identical files; wall-clock timings go
to a separate timings.csv instead.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ._rng import DEFAULT_SEED
from .codes import LinearCode, build_named, dual_distance_at_least
from .codematrix import centered_matrix, coherence_statistic, sample_codewords
from .eigen import hermitian_eigenvalues
from .gf import modulus_from_string
from .semicircle import sc_stieltjes
from .spectral import (
    DiscrepancyReport,
    delta_estimate,
    discrepancy_parts,
    empirical_stieltjes,
    esd_from_spectrum,
)

PAPER_TRIPLES: Tuple[Tuple[int, int], ...] = ((5, 8), (7, 20), (9, 35), (11, 50))
DEFAULT_Z_GRID: Tuple[complex, ...] = tuple(
    complex(e, eta) for eta in (1.0, 0.5, 0.1) for e in (-2, -1, 0, 1, 2)
)
_LARGE_M = 13  # codeword synthesis above this length is gated behind 'large'


class InvalidConfigError(ValueError):
    """Configuration file or parameters cannot drive an experiment."""


class CertificationError(RuntimeError):
    """A code family failed the dual-distance >= 5 certificate."""

    def __init__(self, code_name: str, witness):
        super().__init__(
            f"{code_name} failed dual-distance certification (witness "
            f"support {witness.support if witness else None}); "
            f"pass allow_uncertified to run anyway"
        )
        self.code_name = code_name
        self.witness = witness


@dataclass
class ExperimentConfig:
    """Inputs for one batch run; mirrors the JSON config format."""

    code_family: str
    triples: List[Tuple[int, int]]
    trials: int = 10
    mode: str = "distinct"
    seed: int = DEFAULT_SEED
    z_grid: Tuple[complex, ...] = DEFAULT_Z_GRID
    output_dir: str = "out"
    modulus: Optional[str] = None
    allow_uncertified: bool = False
    large: bool = False
    workers: int = 1

    def validate(self) -> None:
        if not self.code_family:
            raise InvalidConfigError("code_family must be set")
        if not self.triples:
            raise InvalidConfigError("at least one (m, p) pair is required")
        for m, p in self.triples:
            if p < 2:
                raise InvalidConfigError(f"p must be >= 2, got {p}")
            if m >= _LARGE_M and not self.large:
                raise InvalidConfigError(
                    f"m={m} synthesizes very long codewords; set large=true "
                    f"(or pass --large) to confirm"
                )
        if self.trials < 1:
            raise InvalidConfigError("trials must be >= 1")
        if self.mode not in ("distinct", "iid"):
            raise InvalidConfigError(f"unknown sampling mode {self.mode!r}")
        if not self.z_grid:
            raise InvalidConfigError("z_grid must be nonempty")
        for z in self.z_grid:
            if complex(z).imag <= 0:
                raise InvalidConfigError(f"z grid point {z} not in the upper half-plane")
        if self.workers < 1:
            raise InvalidConfigError("workers must be >= 1")
        if self.modulus is not None:
            modulus_from_string(self.modulus)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {
            "code_family", "triples", "trials", "mode", "seed", "z_grid",
            "output_dir", "modulus", "allow_uncertified", "large", "workers",
        }
        unknown = set(data) - known
        if unknown:
            raise InvalidConfigError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        if "triples" in kwargs:
            try:
                kwargs["triples"] = [(int(m), int(p)) for m, p in kwargs["triples"]]
            except (TypeError, ValueError):
                raise InvalidConfigError("triples must be a list of [m, p] pairs") from None
        if "z_grid" in kwargs:
            try:
                kwargs["z_grid"] = tuple(complex(e, h) for e, h in kwargs["z_grid"])
            except (TypeError, ValueError):
                raise InvalidConfigError("z_grid must be a list of [re, im] pairs") from None
        try:
            cfg = cls(**kwargs)
        except TypeError as exc:
            raise InvalidConfigError(str(exc)) from None
        cfg.validate()
        return cfg

    @classmethod
    def from_json(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InvalidConfigError(f"cannot read config {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise InvalidConfigError(f"config {path} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidConfigError("config must be a JSON object")
        return cls.from_dict(data)


def _modulus_tuple(cfg_modulus: Optional[str]):
    return modulus_from_string(cfg_modulus) if cfg_modulus else None


def _resolve_code(code_family: str, m: int, modulus) -> LinearCode:
    if code_family in ("gold", "gold+1", "rm1"):
        return build_named(f"{code_family}:m={m}", modulus)
    return build_named(code_family, modulus)


def run_trial(code: LinearCode, p: int, mode: str, seed: int, stream_id: int,
              trial: int, z_grid: Sequence[complex]
              ) -> Tuple[DiscrepancyReport, np.ndarray]:
    """Sample one matrix; returns the per-trial report and its eigenvalues."""
    t0 = time.perf_counter()
    cw = sample_codewords(code, p, mode, seed, stream_id)
    cm = centered_matrix(cw)
    spectrum = hermitian_eigenvalues(cm.m)
    esd = esd_from_spectrum(spectrum)
    sup, dmax, dmin = discrepancy_parts(esd)
    coherence = coherence_statistic(cw)
    residuals = []
    deltas = []
    for z in z_grid:
        s = empirical_stieltjes(esd, z)
        residuals.append((z, abs(s - sc_stieltjes(z))))
        deltas.append((z, delta_estimate(s, z)))
    runtime_ms = (time.perf_counter() - t0) * 1000.0
    report = DiscrepancyReport(
        code_name=code.name,
        n=code.n,
        k=code.k,
        p=p,
        mode=mode,
        seed=seed,
        trial=trial,
        sup_interval=sup,
        ks_onesided_max=dmax,
        ks_onesided_min=dmin,
        ks=max(dmax, -dmin),
        coherence=coherence,
        stieltjes_residuals=tuple(residuals),
        delta_estimates=tuple(deltas),
        runtime_ms=runtime_ms,
    )
    return report, spectrum.values


def _pool_task(args) -> Tuple[int, DiscrepancyReport, np.ndarray]:
    (family, modulus, m, p, mode, seed, stream_id, trial, z_grid) = args
    code = _resolve_code(family, m, modulus)
    report, values = run_trial(code, p, mode, seed, stream_id, trial, z_grid)
    return stream_id, report, values


def run_experiment(cfg: ExperimentConfig) -> List[DiscrepancyReport]:
    """Execute the full grid and write esd_*.csv, summary.csv, timings.csv."""
    cfg.validate()
    modulus = _modulus_tuple(cfg.modulus)

    codes: Dict[int, LinearCode] = {}
    for m, _ in cfg.triples:
        if m not in codes:
            codes[m] = _resolve_code(cfg.code_family, m, modulus)
    for m, code in codes.items():
        cert = dual_distance_at_least(code, 5)
        if not cert.holds and not cfg.allow_uncertified:
            raise CertificationError(code.name, cert.witness)

    tasks = []
    for ti, (m, p) in enumerate(cfg.triples):
        for trial in range(cfg.trials):
            stream_id = ti * cfg.trials + trial
            tasks.append((m, p, stream_id, trial))

    results: Dict[int, Tuple[DiscrepancyReport, np.ndarray]] = {}
    if cfg.workers == 1:
        for m, p, stream_id, trial in tasks:
            results[stream_id] = run_trial(
                codes[m], p, cfg.mode, cfg.seed, stream_id, trial, cfg.z_grid
            )
    else:
        job_args = [
            (cfg.code_family, modulus, m, p, cfg.mode, cfg.seed, stream_id,
             trial, tuple(cfg.z_grid))
            for m, p, stream_id, trial in tasks
        ]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for stream_id, report, values in pool.map(_pool_task, job_args):
                results[stream_id] = (report, values)

    reports = [results[sid][0] for sid in sorted(results)]

    os.makedirs(cfg.output_dir, exist_ok=True)
    for sid in sorted(results):
        report, values = results[sid]
        path = os.path.join(
            cfg.output_dir, f"esd_{report.n}_{report.p}_{report.trial}.csv"
        )
        with open(path, "w") as fh:
            fh.write(
                f"# code={report.code_name} n={report.n} k={report.k} "
                f"p={report.p} trial={report.trial} seed={cfg.seed} "
                f"mode={cfg.mode} sup_interval={report.sup_interval!r}\n"
            )
            fh.write("eigenvalue\n")
            for lam in values:
                fh.write(f"{float(lam)!r}\n")
    write_summary_csv(reports, os.path.join(cfg.output_dir, "summary.csv"), cfg.z_grid)
    _write_timings(reports, os.path.join(cfg.output_dir, "timings.csv"))
    return reports


def z_tag(z: complex) -> str:
    def fmt(v: float) -> str:
        return f"{v:g}".replace("-", "m").replace(".", "p")

    return f"E{fmt(z.real)}_eta{fmt(z.imag)}"


def summary_header(z_grid: Sequence[complex]) -> List[str]:
    cols = ["code", "n", "k", "p", "mode", "seed", "trial",
            "sup_interval", "ks", "coherence"]
    for z in z_grid:
        tag = z_tag(z)
        cols.append(f"s_err_{tag}")
        cols.append(f"delta_{tag}")
    return cols


def write_summary_csv(reports: Sequence[DiscrepancyReport], path: str,
                      z_grid: Sequence[complex]) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(summary_header(z_grid)) + "\n")
        for r in reports:
            cells = [r.code_name, str(r.n), str(r.k), str(r.p), r.mode,
                     str(r.seed), str(r.trial), repr(r.sup_interval),
                     repr(r.ks), repr(r.coherence)]
            for (_, resid), (_, delta) in zip(r.stieltjes_residuals,
                                              r.delta_estimates):
                cells.append(repr(float(resid)))
                cells.append(repr(abs(delta)))
            fh.write(",".join(cells) + "\n")


def _write_timings(reports: Sequence[DiscrepancyReport], path: str) -> None:
    with open(path, "w") as fh:
        fh.write("code,n,k,p,trial,runtime_ms\n")
        for r in reports:
            fh.write(f"{r.code_name},{r.n},{r.k},{r.p},{r.trial},{r.runtime_ms:.3f}\n")


def read_summary_csv(path: str) -> List[dict]:
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        rows = []
        for line in fh:
            if not line.strip():
                continue
            parts = line.strip().split(",")
            row = dict(zip(header, parts))
            rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# convergence-rate fit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupStats:
    n: int
    p: int
    trials: int
    median: float
    q1: float
    q3: float


@dataclass(frozen=True)
class RateFit:
    """Log-log fit of the median discrepancy against the code length."""

    slope: float
    intercept: float
    beta_hat: float                 # -slope
    gamma_hat: float                # fitted exponent of p against n
    benchmark_beta: float           # min(gamma/4, (1 - gamma)/8)
    groups: Tuple[GroupStats, ...] = field(repr=False)


def fit_rate(samples: Sequence[Tuple[int, int, float]]) -> RateFit:
    """Fit from (n, p, sup_interval) samples; needs >= 3 distinct n,
    >= 10 trials each."""
    by_n: Dict[int, List[float]] = {}
    p_of: Dict[int, int] = {}
    for n, p, sup in samples:
        by_n.setdefault(int(n), []).append(float(sup))
        p_of[int(n)] = int(p)
    if len(by_n) < 3:
        raise ValueError(f"rate fit needs >= 3 distinct n, got {len(by_n)}")
    for n, sups in by_n.items():
        if len(sups) < 10:
            raise ValueError(f"rate fit needs >= 10 trials per n; n={n} has {len(sups)}")

    groups = []
    for n in sorted(by_n):
        sups = np.asarray(by_n[n])
        groups.append(GroupStats(
            n=n, p=p_of[n], trials=len(sups),
            median=float(np.median(sups)),
            q1=float(np.quantile(sups, 0.25)),
            q3=float(np.quantile(sups, 0.75)),
        ))

    log_n = np.log(np.array([g.n for g in groups], dtype=np.float64))
    log_med = np.log(np.array([g.median for g in groups], dtype=np.float64))
    slope, intercept = _least_squares(log_n, log_med)
    log_p = np.log(np.array([g.p for g in groups], dtype=np.float64))
    gamma, _ = _least_squares(log_n, log_p)
    benchmark = min(gamma / 4.0, (1.0 - gamma) / 8.0)
    return RateFit(slope, intercept, -slope, gamma, benchmark, tuple(groups))


def fit_rate_from_summaries(paths: Sequence[str]) -> RateFit:
    samples = []
    for path in paths:
        for row in read_summary_csv(path):
            samples.append((int(row["n"]), int(row["p"]), float(row["sup_interval"])))
    return fit_rate(samples)


def _least_squares(x: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    xbar = x.mean()
    ybar = y.mean()
    dx = x - xbar
    denom = float((dx * dx).sum())
    if denom == 0.0:
        raise ValueError("rate fit needs variation in n")
    slope = float((dx * (y - ybar)).sum() / denom)
    return slope, float(ybar - slope * xbar)
