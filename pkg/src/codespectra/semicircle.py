"""The Wigner semicircle law on [-2, 2]: density, CDF, interval measure,
and Stieltjes transform.

The CDF is closed form (integrating the density by hand); numerical
quadrature survives only as a test oracle.  The Stieltjes transform uses
the square root branch with positive imaginary part, which keeps
Im s(z) > 0 on the upper half plane and makes s the root of
u = 1 / (-z - u) picked out by that sign condition.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

SUPPORT = (-2.0, 2.0)


def sc_pdf(x):
    """Density (1/2 pi) sqrt(4 - x^2) on [-2, 2], zero outside."""
    scalar = np.isscalar(x) or getattr(x, "ndim", 0) == 0
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.zeros_like(x)
    inside = np.abs(x) <= 2.0
    out[inside] = np.sqrt(4.0 - x[inside] ** 2) / (2.0 * np.pi)
    return float(out[0]) if scalar else out


def sc_cdf(x):
    """Closed-form CDF: 1/2 + x sqrt(4-x^2)/(4 pi) + arcsin(x/2)/pi inside."""
    scalar = np.isscalar(x) or getattr(x, "ndim", 0) == 0
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.empty_like(x)
    lo = x <= -2.0
    hi = x >= 2.0
    mid = ~(lo | hi)
    out[lo] = 0.0
    out[hi] = 1.0
    xm = x[mid]
    out[mid] = 0.5 + xm * np.sqrt(4.0 - xm ** 2) / (4.0 * np.pi) + np.arcsin(xm / 2.0) / np.pi
    return float(out[0]) if scalar else out


def sc_interval(a: float, b: float) -> float:
    """Semicircle mass of the interval [a, b] (the law has no atoms)."""
    if a > b:
        raise ValueError(f"interval endpoints out of order: {a} > {b}")
    return float(sc_cdf(b) - sc_cdf(a))


def sc_stieltjes(z: complex) -> complex:
    """s(z) = (-z + sqrt(z^2 - 4)) / 2, root chosen with Im sqrt > 0."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError(f"Stieltjes transform needs Im z > 0, got z = {z}")
    w = cmath.sqrt(z * z - 4.0)
    if w.imag < 0:
        w = -w
    return (-z + w) / 2.0
