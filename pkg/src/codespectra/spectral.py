"""Empirical spectral statistics against the semicircle law.

The headline metric is the supremum over real intervals of
|mu_emp(I) - rho_sc(I)|.  Writing D(x) = F_emp(x) - F_sc(x), the signed
discrepancy of any interval is a difference of two D values (with left
limits at atoms standing in for open endpoints), so the supremum equals

    max(D over all evaluations, 0) - min(D over all evaluations, 0)

with the zeros accounting for the empty interval at +/- infinity.  This is
exact and O(p log p); no grid search is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._rng import SplitMix64
from .codes import LinearCode, codewords_for_indices
from .codematrix import character_map
from .eigen import Spectrum
from .semicircle import sc_cdf, sc_stieltjes


@dataclass(frozen=True)
class EmpiricalSpectralDistribution:
    """Uniform probability measure on a sorted multiset of eigenvalues."""

    atoms: np.ndarray

    @property
    def p_atoms(self) -> int:
        return len(self.atoms)

    def cdf(self, x) -> np.ndarray:
        return np.searchsorted(self.atoms, x, side="right") / len(self.atoms)


def esd_from_spectrum(spectrum: Spectrum) -> EmpiricalSpectralDistribution:
    if len(spectrum.values) == 0:
        raise ValueError("empty spectrum has no spectral distribution")
    atoms = np.sort(np.asarray(spectrum.values, dtype=np.float64))
    atoms.setflags(write=False)
    return EmpiricalSpectralDistribution(atoms)


def esd_from_values(values) -> EmpiricalSpectralDistribution:
    """Convenience wrapper for plain eigenvalue arrays (e.g. parsed CSVs)."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise ValueError("empty spectrum has no spectral distribution")
    atoms = np.sort(values)
    atoms.setflags(write=False)
    return EmpiricalSpectralDistribution(atoms)


def discrepancy_parts(esd: EmpiricalSpectralDistribution) -> Tuple[float, float, float]:
    """(sup-interval discrepancy, max D, min D), exactly.

    D is evaluated at every atom both as a right limit (the CDF value) and a
    left limit; 0 stands in for the evaluations at +/- infinity.
    """
    atoms = esd.atoms
    p = len(atoms)
    fsc = sc_cdf(atoms)
    d_right = np.arange(1, p + 1) / p - fsc
    d_left = np.arange(0, p) / p - fsc
    dmax = max(float(d_right.max()), float(d_left.max()), 0.0)
    dmin = min(float(d_right.min()), float(d_left.min()), 0.0)
    return dmax - dmin, dmax, dmin


def interval_discrepancy(esd: EmpiricalSpectralDistribution) -> float:
    """sup over intervals I of |mu_emp(I) - rho_sc(I)|."""
    return discrepancy_parts(esd)[0]


def ks_statistic(esd: EmpiricalSpectralDistribution) -> float:
    """Classical two-sided Kolmogorov-Smirnov distance to the semicircle CDF."""
    _, dmax, dmin = discrepancy_parts(esd)
    return max(dmax, -dmin)


def empirical_stieltjes(esd: EmpiricalSpectralDistribution, z: complex) -> complex:
    """(1/p) sum 1/(lambda_j - z); equals (1/p) Tr G(z) for the source matrix."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError(f"Stieltjes transform needs Im z > 0, got z = {z}")
    return complex(np.mean(1.0 / (esd.atoms - z)))


def delta_estimate(s_mean: complex, z: complex) -> complex:
    """Invert s = 1/(-z - s + Delta) for Delta, given an estimate of E s(z)."""
    if s_mean == 0:
        raise ZeroDivisionError("cannot invert the self-consistency at s = 0")
    return 1.0 / s_mean + z + s_mean


@dataclass(frozen=True)
class ConcentrationReport:
    trials: int
    epsilon: float
    exceedance: float      # empirical P(|s - mean| >= epsilon)
    bound: float           # 2 exp(-p eta^2 eps^2 / 8)
    binomial_sigma: float
    flagged: bool


def concentration_probe(s_values: Sequence[complex], epsilon: float,
                        p: int, eta: float) -> ConcentrationReport:
    """Empirical check of the Stieltjes-transform concentration inequality.

    Flags only if the exceedance rate beats the bound by more than three
    binomial standard deviations.
    """
    count = len(s_values)
    if count < 30:
        raise ValueError(f"need at least 30 trials for a meaningful rate, got {count}")
    vals = np.asarray(s_values, dtype=np.complex128)
    mean = vals.sum() / count  # fixed summation order
    exceed = float(np.mean(np.abs(vals - mean) >= epsilon))
    bound = 2.0 * float(np.exp(-p * eta * eta * epsilon * epsilon / 8.0))
    capped = min(bound, 1.0)
    sigma = float(np.sqrt(capped * (1.0 - capped) / count))
    flagged = exceed > bound + 3.0 * sigma
    return ConcentrationReport(count, epsilon, exceed, bound, sigma, flagged)


# ---------------------------------------------------------------------------
# exact moment identities (the dual-distance separator)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MomentReport:
    pair_max: float
    quad_max: float
    paired_max: float
    quadruples_checked: int
    violating_pair: Optional[Tuple[int, int]]
    violating_quadruple: Optional[Tuple[int, int, int, int]]

    @property
    def passed(self) -> bool:
        return (self.pair_max < 1e-10 and self.quad_max < 1e-10
                and self.paired_max <= 1.0 + 1e-12)


def moment_oracle(code: LinearCode, quad_samples: int = 10_000,
                  seed: int = 0xBADC0FFE) -> MomentReport:
    """Average character products over ALL codewords (exact enumeration).

    Pair moments E(x_j conj(x_k)) are computed for every j != k.  Fourth
    moments are sampled: ``quad_samples`` index quadruples (j, t, k, s)
    whose signed index vector e_j + e_t - e_k - e_s is nonzero (the
    "not coming in pairs" case, where the average must vanish whenever the
    dual distance is at least 5), plus the paired ones encountered on the
    way, whose average is merely bounded by 1.
    """
    spec = code.spec
    size = spec.q ** code.k
    if size > (1 << 12):
        raise ValueError(f"moment oracle enumerates all codewords; {size} is too many")
    words = codewords_for_indices(code, range(size))
    cmap = character_map(spec)
    x = cmap.roots[cmap.exponents(words)]  # size x n, unit modulus

    n = code.n
    pair = (x.T @ np.conj(x)) / size
    off = np.abs(pair - np.diag(np.diag(pair)))
    pair_max = float(off.max()) if n > 1 else 0.0
    violating_pair = None
    if pair_max >= 1e-10:
        j, k = np.unravel_index(int(np.argmax(off)), off.shape)
        violating_pair = (int(j), int(k))

    rng = SplitMix64(seed)
    p_char = spec.p
    quads: List[Tuple[int, int, int, int]] = []
    paired: List[Tuple[int, int, int, int]] = []
    while len(quads) < quad_samples:
        j, t, k, s = (rng.below(n) for _ in range(4))
        counts = {}
        for idx, delta in ((j, 1), (t, 1), (k, -1), (s, -1)):
            counts[idx] = counts.get(idx, 0) + delta
        if any(c % p_char for c in counts.values()):
            quads.append((j, t, k, s))
        elif len(paired) < 256:
            paired.append((j, t, k, s))

    quad_max = 0.0
    violating_quadruple = None
    chunk = 512
    for a in range(0, len(quads), chunk):
        block = quads[a:a + chunk]
        jj, tt, kk, ss = (np.array(col) for col in zip(*block))
        sums = np.abs(
            (x[:, jj] * x[:, tt] * np.conj(x[:, kk]) * np.conj(x[:, ss])).sum(axis=0)
        ) / size
        local = int(np.argmax(sums))
        if sums[local] > quad_max:
            quad_max = float(sums[local])
            if quad_max >= 1e-10:
                violating_quadruple = block[local]

    paired_max = 0.0
    for j, t, k, s in paired:
        val = abs((x[:, j] * x[:, t] * np.conj(x[:, k]) * np.conj(x[:, s])).sum()) / size
        paired_max = max(paired_max, float(val))

    return MomentReport(pair_max, quad_max, paired_max, len(quads),
                        violating_pair, violating_quadruple)


# ---------------------------------------------------------------------------
# per-trial report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscrepancyReport:
    """Everything one sampled matrix contributes to the experiment CSVs."""

    code_name: str
    n: int
    k: int
    p: int
    mode: str
    seed: int
    trial: int
    sup_interval: float
    ks_onesided_max: float
    ks_onesided_min: float
    ks: float
    coherence: float
    stieltjes_residuals: Tuple[Tuple[complex, float], ...]
    delta_estimates: Tuple[Tuple[complex, complex], ...]
    runtime_ms: float
