"""Dense Hermitian eigenvalues by cyclic Jacobi rotations, plus resolvents.

Self-contained on purpose: no LAPACK-style dependency, only elementary numpy
array arithmetic.  Each rotation annihilates one off-diagonal entry with a
two-sided unitary 2x2 transform; pairs are visited in cyclic-by-row order
until the off-diagonal Frobenius norm falls below 1e-12 * max(1, ||M||_F).
For real symmetric input (the q = 2 case) the phase factor degenerates to a
sign and the iteration runs on real arrays.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

SWEEP_CAP = 100
_REL_TOL = 1e-12


class NonHermitianError(ValueError):
    """Input matrix is not Hermitian; carries the offending entry."""

    def __init__(self, j: int, k: int, deviation: float):
        super().__init__(
            f"matrix is not Hermitian: entry ({j},{k}) deviates by {deviation:.3e}"
        )
        self.indices = (j, k)
        self.deviation = deviation


class ConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before reaching the target residual."""

    def __init__(self, residual: float, target: float):
        super().__init__(
            f"no convergence in {SWEEP_CAP} sweeps: off-diagonal norm "
            f"{residual:.3e} > target {target:.3e}"
        )
        self.residual = residual
        self.target = target


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalues plus the final off-diagonal residual."""

    values: np.ndarray
    residual: float

    def __len__(self) -> int:
        return len(self.values)


def _check_hermitian(a: np.ndarray, tol: float = 1e-12) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dev = np.abs(a - a.conj().T)
    j, k = np.unravel_index(np.argmax(dev), dev.shape)
    if dev[j, k] > tol:
        raise NonHermitianError(int(j), int(k), float(dev[j, k]))


def _offdiag_norm(w: np.ndarray) -> float:
    off = w.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt((np.abs(off) ** 2).sum()))


def hermitian_eigenvalues(m) -> Spectrum:
    """All eigenvalues of a Hermitian matrix, ascending.

    Raises :class:`NonHermitianError` for input that is not Hermitian to
    within 1e-12 entrywise, and :class:`ConvergenceError` (carrying the
    residual) if 100 sweeps do not reach the target.
    """
    a = np.asarray(m)
    _check_hermitian(a)
    p = a.shape[0]
    if np.iscomplexobj(a):
        if np.abs(a.imag).max() == 0.0:
            w = a.real.astype(np.float64)
        else:
            w = a.astype(np.complex128)
    else:
        w = a.astype(np.float64)
    w = (w + w.conj().T) / 2.0

    if p == 1:
        return Spectrum(np.array([float(np.real(w[0, 0]))]), 0.0)

    fro = float(np.sqrt((np.abs(w) ** 2).sum()))
    target = _REL_TOL * max(1.0, fro)
    # entries this small cannot push the off-diagonal norm past the target
    skip = target / (2.0 * p)
    complex_path = np.iscomplexobj(w)

    residual = _offdiag_norm(w)
    sweeps = 0
    while residual >= target:
        if sweeps == SWEEP_CAP:
            raise ConvergenceError(residual, target)
        for j in range(p - 1):
            for k in range(j + 1, p):
                b = w[j, k]
                absb = abs(b)
                if absb <= skip:
                    continue
                ajj = w[j, j].real
                akk = w[k, k].real
                f = b / absb if complex_path else (1.0 if b > 0 else -1.0)
                tau = (akk - ajj) / (2.0 * absb)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                fc = np.conj(f)
                # rows, V* on the left with V = diag(1, conj(f)) . R(c, s)
                rj = c * w[j, :] - (s * f) * w[k, :]
                rk = s * w[j, :] + (c * f) * w[k, :]
                w[j, :] = rj
                w[k, :] = rk
                # columns, V on the right
                cj = c * w[:, j] - (s * fc) * w[:, k]
                ck = s * w[:, j] + (c * fc) * w[:, k]
                w[:, j] = cj
                w[:, k] = ck
                # exact 2x2 block, avoiding accumulated cross terms
                w[j, j] = ajj - t * absb
                w[k, k] = akk + t * absb
                w[j, k] = 0.0
                w[k, j] = 0.0
        sweeps += 1
        residual = _offdiag_norm(w)

    values = np.sort(np.real(np.diagonal(w)))
    return Spectrum(values, residual)


def green_function(m, z: complex) -> np.ndarray:
    """(M - z I)^{-1} for Hermitian M and Im z > 0, by Gauss-Jordan
    elimination with partial pivoting; the inverse is verified to satisfy
    ||(M - zI) G - I||_max < 1e-8 before being returned."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError(f"Green function needs Im z > 0, got z = {z}")
    a = np.asarray(m)
    _check_hermitian(a)
    p = a.shape[0]
    shifted = a.astype(np.complex128) - z * np.eye(p)
    aug = np.concatenate([shifted.copy(), np.eye(p, dtype=np.complex128)], axis=1)
    for col in range(p):
        piv = col + int(np.argmax(np.abs(aug[col:, col])))
        if aug[piv, col] == 0:
            raise ZeroDivisionError("singular resolvent; Im z > 0 should prevent this")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = aug[col] / aug[col, col]
        factors = aug[:, col].copy()
        factors[col] = 0.0
        aug -= np.outer(factors, aug[col])
    g = aug[:, p:]
    residual = float(np.abs(shifted @ g - np.eye(p)).max())
    if residual >= 1e-8:
        raise ArithmeticError(
            f"resolvent verification failed: residual {residual:.3e} >= 1e-8"
        )
    return g


def zeroed_green_function(m, indices, z: complex) -> np.ndarray:
    """Green function of the matrix with the given rows and columns zeroed."""
    a = np.array(m)
    for ell in indices:
        a[ell, :] = 0.0
        a[:, ell] = 0.0
    return green_function(a, z)
