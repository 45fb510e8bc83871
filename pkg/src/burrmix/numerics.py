"""Shared numerical machinery: adaptive quadrature, univariate samplers,
and distance statistics.

Integrands passed to the quadrature routines must accept numpy arrays
(they are evaluated on all panel nodes at once).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np


class DegenerateDensityError(ValueError):
    """Raised when a density has no mass on the requested grid."""


class SliceStartError(ValueError):
    """Raised when a slice sampler is started where the target vanishes."""


# 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
# Odd-indexed nodes are the embedded Gauss points.
_XK = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759,
    0.991455371120813,
])
_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870,
])
_GAUSS_IDX = np.arange(1, 15, 2)


@dataclass(frozen=True)
class QuadResult:
    """Value, absolute error estimate, and convergence flag of a quadrature."""

    value: float
    error: float
    converged: bool


def _panel(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fx = np.asarray(f(mid + half * _XK), dtype=float)
    k15 = half * float(fx @ _WK)
    g7 = half * float(fx[_GAUSS_IDX] @ _WG)
    return k15, abs(k15 - g7)


def integrate_finite(f, lo, hi, tol=1e-10, max_panels=1024):
    """Globally adaptive Gauss-Kronrod integration of f on (lo, hi).

    Panels with the largest error estimate are bisected until the summed
    error falls below tol or max_panels is reached; non-convergence is
    flagged on the result, never raised.
    """
    if not (lo < hi):
        raise ValueError(f"empty interval ({lo}, {hi})")
    value, err = _panel(f, lo, hi)
    heap = [(-err, 0, lo, hi, value, err)]
    total_err = err
    count = 1
    tick = 1
    while total_err > tol and count < max_panels:
        _, _, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        v1, e1 = _panel(f, a, m)
        v2, e2 = _panel(f, m, b)
        value += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, tick, a, m, v1, e1))
        heapq.heappush(heap, (-e2, tick + 1, m, b, v2, e2))
        tick += 2
        count += 1
    if not math.isfinite(value):
        return QuadResult(value, math.inf, False)
    return QuadResult(value, total_err, total_err <= tol)


def integrate_semiinfinite(f, tol=1e-10, max_panels=1024):
    """Integrate f on (0, inf) via the substitution x = t / (1 - t)."""

    def transformed(t):
        t = np.asarray(t, dtype=float)
        s = 1.0 - t
        ok = s > 0.0
        out = np.zeros_like(t)
        # nodes rounding onto t = 1 exactly carry the limit value 0
        out[ok] = np.asarray(f(t[ok] / s[ok]), dtype=float) / (s[ok] * s[ok])
        return out

    return integrate_finite(transformed, 0.0, 1.0, tol=tol,
                            max_panels=max_panels)


def slice_sample(log_target, x0, lo, hi, rng, steps=1, width=None):
    """Univariate slice sampler on (lo, hi) with stepping out and shrinkage.

    Returns the state after `steps` updates started from x0. The stationary
    distribution is proportional to exp(log_target) restricted to (lo, hi).
    """
    if not (lo < x0 < hi):
        raise SliceStartError(f"start {x0} outside ({lo}, {hi})")
    logf = float(log_target(x0))
    if not math.isfinite(logf):
        raise SliceStartError(f"log target not finite at start {x0}")
    w = width if width is not None else (hi - lo) / 10.0
    x = x0
    for _ in range(steps):
        level = logf + math.log1p(-rng.random())
        left = x - w * rng.random()
        right = left + w
        while left > lo and log_target(left) > level:
            left -= w
        while right < hi and log_target(right) > level:
            right += w
        left = max(left, lo)
        right = min(right, hi)
        while True:
            x1 = left + (right - left) * rng.random()
            logf1 = float(log_target(x1))
            if logf1 >= level:
                x, logf = x1, logf1
                break
            if x1 < x:
                left = x1
            else:
                right = x1
    return x


def grid_inverse_cdf_sample(density, lo, hi, n_grid, rng):
    """Draw from an unnormalized density by inverting its trapezoid cdf.

    The density callable is evaluated once on a linspace grid; the draw
    interpolates linearly between cumulative knots.
    """
    xs = np.linspace(lo, hi, n_grid)
    fs = np.asarray(density(xs), dtype=float)
    if fs.shape != xs.shape:
        raise ValueError("density must evaluate elementwise on the grid")
    if not np.all(np.isfinite(fs)) or np.any(fs < 0):
        raise DegenerateDensityError("density must be finite and nonnegative")
    cum = np.empty_like(xs)
    cum[0] = 0.0
    np.cumsum(0.5 * (fs[1:] + fs[:-1]) * np.diff(xs), out=cum[1:])
    total = cum[-1]
    if total <= 0.0:
        raise DegenerateDensityError("density has zero total mass on the grid")
    return float(np.interp(rng.random() * total, cum, xs))


def ks_statistic(sample, cdf):
    """Kolmogorov-Smirnov distance between a sample and a cdf callable."""
    x = np.sort(np.asarray(sample, dtype=float))
    n = x.size
    if n == 0:
        raise ValueError("empty sample")
    fx = np.asarray(cdf(x), dtype=float)
    steps = np.arange(1, n + 1) / n
    return float(max(np.max(steps - fx), np.max(fx - (steps - 1.0 / n))))


def harmonic_mean(xs):
    """n / sum(1/x_j) for strictly positive xs."""
    x = np.asarray(xs, dtype=float)
    if x.size == 0:
        raise ValueError("empty sample")
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise ValueError("harmonic mean requires strictly positive values")
    return float(x.size / np.sum(1.0 / x))
