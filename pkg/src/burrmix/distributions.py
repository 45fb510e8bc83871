"""Distribution families used by the mixture model, its priors, and the
simulation scenarios.

Each family is a frozen dataclass with vectorized pdf/logpdf/cdf methods
and a sample(rng) method taking a numpy Generator. The Burr XII family
additionally exposes survival and quantile functions, and free functions
(burr_logpdf etc.) are provided for hot loops that carry bare floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

_LOG_2PI = math.log(2.0 * math.pi)


class ParameterError(ValueError):
    """Invalid distribution parameter or argument."""


def _require(cond, msg):
    if not cond:
        raise ParameterError(msg)


def _positive_times(t):
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)) or np.any(t < 0):
        raise ParameterError("times must be finite and nonnegative")
    return t


def _log1p_pow(t, c):
    """log(1 + t**c) for t > 0, stable for any magnitude of t**c."""
    with np.errstate(divide="ignore"):
        return np.logaddexp(0.0, c * np.log(t))


def burr_logpdf(t, c, k):
    """Log density of the Burr XII law: c*k*t^(c-1) * (1+t^c)^-(k+1)."""
    _require(c > 0 and k > 0 and math.isfinite(c) and math.isfinite(k),
             "Burr XII needs positive finite shapes")
    t = _positive_times(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        lt = np.log(t)
        out = (math.log(c) + math.log(k) + (c - 1.0) * lt
               - (k + 1.0) * np.logaddexp(0.0, c * lt))
    if c > 1.0:
        out = np.where(t == 0.0, -np.inf, out)
    elif c == 1.0:
        out = np.where(t == 0.0, math.log(k), out)
    else:
        out = np.where(t == 0.0, np.inf, out)
    return out if out.ndim else float(out)


def burr_pdf(t, c, k):
    return np.exp(burr_logpdf(t, c, k))


def burr_cdf(t, c, k):
    _require(c > 0 and k > 0, "Burr XII needs positive finite shapes")
    t = _positive_times(t)
    out = -np.expm1(-k * _log1p_pow(t, c))
    return out if out.ndim else float(out)


def burr_log_survival(t, c, k):
    _require(c > 0 and k > 0, "Burr XII needs positive finite shapes")
    t = _positive_times(t)
    out = -k * _log1p_pow(t, c)
    return out if out.ndim else float(out)


def burr_survival(t, c, k):
    return np.exp(burr_log_survival(t, c, k))


def burr_quantile(u, c, k):
    """Inverse cdf: ((1-u)^(-1/k) - 1)^(1/c) for u in [0, 1)."""
    _require(c > 0 and k > 0, "Burr XII needs positive finite shapes")
    u = np.asarray(u, dtype=float)
    if np.any(u < 0) or np.any(u >= 1):
        raise ParameterError("quantile level must lie in [0, 1)")
    out = np.expm1(-np.log1p(-u) / k) ** (1.0 / c)
    return out if out.ndim else float(out)


def burr_sample(c, k, rng, size=None):
    return burr_quantile(rng.random(size), c, k)


@dataclass(frozen=True)
class LogNormal:
    mu: float
    sigma2: float

    def __post_init__(self):
        _require(self.sigma2 > 0, "sigma2 must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            lx = np.log(x)
            out = (-0.5 * _LOG_2PI - 0.5 * math.log(self.sigma2) - lx
                   - 0.5 * (lx - self.mu) ** 2 / self.sigma2)
        out = np.where(x > 0, out, -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            z = (np.log(x) - self.mu) / math.sqrt(self.sigma2)
        out = np.where(x > 0, special.ndtr(z), 0.0)
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return np.exp(self.mu
                      + math.sqrt(self.sigma2) * rng.standard_normal(size))


@dataclass(frozen=True)
class Gamma:
    shape: float
    rate: float

    def __post_init__(self):
        _require(self.shape > 0 and self.rate > 0,
                 "shape and rate must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (self.shape * math.log(self.rate)
                   - math.lgamma(self.shape)
                   + (self.shape - 1.0) * np.log(x) - self.rate * x)
        out = np.where(x > 0, out, -np.inf)
        if self.shape == 1.0:
            out = np.where(x == 0.0, math.log(self.rate), out)
        elif self.shape < 1.0:
            out = np.where(x == 0.0, np.inf, out)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = special.gammainc(self.shape, self.rate * np.clip(x, 0.0, None))
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return rng.gamma(self.shape, 1.0 / self.rate, size)


@dataclass(frozen=True)
class InverseGamma:
    shape: float
    scale: float

    def __post_init__(self):
        _require(self.shape > 0 and self.scale > 0,
                 "shape and scale must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (self.shape * math.log(self.scale)
                   - math.lgamma(self.shape)
                   - (self.shape + 1.0) * np.log(x) - self.scale / x)
        out = np.where(x > 0, out, -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            out = np.where(x > 0,
                           special.gammaincc(self.shape,
                                             self.scale / np.where(x > 0, x, 1.0)),
                           0.0)
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return 1.0 / rng.gamma(self.shape, 1.0 / self.scale, size)


@dataclass(frozen=True)
class Pareto:
    shape: float
    scale: float

    def __post_init__(self):
        _require(self.shape > 0 and self.scale > 0,
                 "shape and scale must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (math.log(self.shape) + self.shape * math.log(self.scale)
                   - (self.shape + 1.0) * np.log(x))
        out = np.where(x >= self.scale, out, -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x >= self.scale,
                       1.0 - (self.scale / np.clip(x, self.scale, None)) ** self.shape,
                       0.0)
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return self.scale * (1.0 - rng.random(size)) ** (-1.0 / self.shape)


@dataclass(frozen=True)
class Beta:
    a: float
    b: float

    def __post_init__(self):
        _require(self.a > 0 and self.b > 0, "both shapes must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = ((self.a - 1.0) * np.log(x)
                   + (self.b - 1.0) * np.log1p(-x)
                   - special.betaln(self.a, self.b))
        out = np.where((x > 0) & (x < 1), out, -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = special.betainc(self.a, self.b, np.clip(x, 0.0, 1.0))
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return rng.beta(self.a, self.b, size)


@dataclass(frozen=True)
class Uniform:
    lo: float
    hi: float

    def __post_init__(self):
        _require(self.lo < self.hi, "lo must be below hi")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where((x >= self.lo) & (x <= self.hi),
                       -math.log(self.hi - self.lo), -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.clip((x - self.lo) / (self.hi - self.lo), 0.0, 1.0)
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return rng.uniform(self.lo, self.hi, size)


@dataclass(frozen=True)
class Exponential:
    mean: float

    def __post_init__(self):
        _require(self.mean > 0, "mean must be positive")

    def logpdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x >= 0, -math.log(self.mean) - x / self.mean, -np.inf)
        return out if out.ndim else float(out)

    def pdf(self, x):
        return np.exp(self.logpdf(x))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = -np.expm1(-np.clip(x, 0.0, None) / self.mean)
        return out if out.ndim else float(out)

    def sample(self, rng, size=None):
        return rng.exponential(self.mean, size)


@dataclass(frozen=True)
class BurrXII:
    c: float
    k: float

    def __post_init__(self):
        _require(self.c > 0 and self.k > 0, "both shapes must be positive")

    def logpdf(self, x):
        return burr_logpdf(x, self.c, self.k)

    def pdf(self, x):
        return burr_pdf(x, self.c, self.k)

    def cdf(self, x):
        return burr_cdf(x, self.c, self.k)

    def survival(self, x):
        return burr_survival(x, self.c, self.k)

    def quantile(self, u):
        return burr_quantile(u, self.c, self.k)

    def sample(self, rng, size=None):
        return burr_sample(self.c, self.k, rng, size)


DistSpec = (LogNormal | Gamma | InverseGamma | Pareto | Beta | Uniform
            | Exponential | BurrXII)
