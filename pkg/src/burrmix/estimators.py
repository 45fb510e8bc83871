"""Kernel density estimators for positive data, classic and inverse-weighted.

Both estimators build a Gaussian kernel mixture, truncate it to (0, inf),
and renormalize by quadrature. The indirect variant divides each kernel's
mass by its center, which undoes length bias: the weights mu_hat / x_j sum
to roughly one because mu_hat is the harmonic mean of the sample.
"""

from __future__ import annotations

import math

import numpy as np

from .numerics import harmonic_mean, integrate_semiinfinite

_SQRT_2PI = math.sqrt(2.0 * math.pi)


class DegenerateSampleError(ValueError):
    """Raised when a sample has no spread, so no bandwidth exists."""


def silverman_bandwidth(sample):
    """0.9 * min(sd, iqr/1.34) * n^(-1/5), the rule-of-thumb bandwidth."""
    x = np.asarray(sample, dtype=float)
    if x.size < 2:
        raise DegenerateSampleError("bandwidth needs at least two points")
    sd = float(np.std(x, ddof=1))
    q75, q25 = np.percentile(x, [75.0, 25.0])
    spread = min(sd, (q75 - q25) / 1.34)
    if spread <= 0 or not math.isfinite(spread):
        raise DegenerateSampleError("sample has no spread")
    return 0.9 * spread * x.size ** (-0.2)


def _validate_sample(sample, positive):
    x = np.asarray(sample, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("sample must be a nonempty 1-d array")
    if not np.all(np.isfinite(x)):
        raise ValueError("sample must be finite")
    if positive and np.any(x <= 0):
        raise ValueError("sample must be strictly positive")
    return x


def _mixture(points, weights, h, x):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    z = (x[:, None] - points[None, :]) / h
    vals = np.exp(-0.5 * z * z) @ weights / (h * _SQRT_2PI)
    return np.where(x > 0, vals, 0.0)


def _renormalized(points, weights, h, x, tol):
    mass = integrate_semiinfinite(lambda y: _mixture(points, weights, h, y),
                                  tol=tol, max_panels=2048)
    if not mass.converged or mass.value <= 0:
        raise ValueError("kernel mixture mass failed to converge")
    x = np.asarray(x, dtype=float)
    out = _mixture(points, weights, h, x) / mass.value
    return out if x.ndim else float(out[0])


def classic_kde(sample, h, x, tol=1e-10):
    """Gaussian kde truncated to (0, inf) and renormalized, evaluated at x."""
    pts = _validate_sample(sample, positive=False)
    if not (h > 0 and math.isfinite(h)):
        raise ValueError("bandwidth must be positive and finite")
    w = np.full(pts.size, 1.0 / pts.size)
    return _renormalized(pts, w, h, x, tol)


def indirect_kde(sample, h, x, tol=1e-10):
    """Length-bias-corrected kde: kernel j carries mass mu_hat / x_j.

    The sample must be strictly positive since each point is inverted.
    """
    pts = _validate_sample(sample, positive=True)
    if not (h > 0 and math.isfinite(h)):
        raise ValueError("bandwidth must be positive and finite")
    mu = harmonic_mean(pts)
    w = mu / pts / pts.size
    return _renormalized(pts, w, h, x, tol)
