"""Sampling-weight functions, weighted densities, and the integrability
check that decides whether a weighted density can be de-biased at all.

A weight function w maps (0, inf) to (0, inf). Observing a base density
f under w-biased sampling yields g(x) = w(x) f(x) / E_f[w(X)]; the
de-biasing machinery needs 1/w integrable against g, which fails for
heavy weights and heavy-tailed g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import DistSpec, Gamma, LogNormal
from .numerics import integrate_finite, integrate_semiinfinite


class WeightDomainError(ValueError):
    """Raised when a weight is evaluated outside (0, inf)."""


class WeightingInfeasibleError(ValueError):
    """Raised when E_f[w(X)] fails to converge, so no weighted density exists."""


def _check_domain(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise WeightDomainError("weights are defined on (0, inf) only")
    return x


@dataclass(frozen=True)
class UnitWeight:
    """w(x) = 1: no sampling bias."""

    def __call__(self, x):
        x = _check_domain(x)
        out = np.ones_like(x)
        return out if out.ndim else 1.0

    def log(self, x):
        x = _check_domain(x)
        out = np.zeros_like(x)
        return out if out.ndim else 0.0

    def describe(self):
        return "unit"


@dataclass(frozen=True)
class LengthBias:
    """w(x) = x: longer durations are proportionally more likely sampled."""

    def __call__(self, x):
        x = _check_domain(x)
        return x if x.ndim else float(x)

    def log(self, x):
        x = _check_domain(x)
        out = np.log(x)
        return out if out.ndim else float(out)

    def describe(self):
        return "length"


@dataclass(frozen=True)
class PowerExp:
    """w(x) = x**a * exp(-x/b); b may be inf for a pure power weight."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a >= 0 and math.isfinite(self.a)):
            raise WeightDomainError("power exponent must be finite and >= 0")
        if not (self.b > 0):
            raise WeightDomainError("exponential scale must be positive")

    def __call__(self, x):
        out = np.exp(self.log(x))
        return out if isinstance(out, np.ndarray) and out.ndim else float(out)

    def log(self, x):
        x = _check_domain(x)
        out = self.a * np.log(x) - x / self.b
        return out if out.ndim else float(out)

    def describe(self):
        return f"powexp:{self.a:g},{self.b:g}"


WeightFn = UnitWeight | LengthBias | PowerExp


def _power_exp_form(weight):
    """Reduce a weight to (a, b) with w(x) = x**a exp(-x/b), if possible."""
    if isinstance(weight, UnitWeight):
        return 0.0, math.inf
    if isinstance(weight, LengthBias):
        return 1.0, math.inf
    if isinstance(weight, PowerExp):
        return weight.a, weight.b
    return None


@dataclass(frozen=True)
class WeightedPair:
    """A base density f, a weight w, and the induced observed density g.

    `weighted` carries the closed form of g when one exists; g() always
    evaluates w(x) f(x) / normalizer directly, so the two must agree.
    """

    base: DistSpec
    weight: WeightFn
    normalizer: float
    weighted: DistSpec | None = None

    def log_g(self, x):
        out = (self.weight.log(x) + self.base.logpdf(x)
               - math.log(self.normalizer))
        return out

    def g(self, x):
        return np.exp(self.log_g(x))


def make_weighted(base, weight, tol=1e-10):
    """Build the observed-density pair for a base law under a weight.

    The normalizer E_f[w(X)] is computed by adaptive quadrature; an
    analytic form of g is attached for the conjugate families (log-normal
    under length bias, gamma under power-exponential weights).
    """

    def integrand(x):
        return np.exp(weight.log(x) + base.logpdf(x))

    res = integrate_semiinfinite(integrand, tol=tol, max_panels=4096)
    if not res.converged or not math.isfinite(res.value) or res.value <= 0:
        raise WeightingInfeasibleError(
            f"E[w(X)] did not converge (last estimate {res.value:.6g})")

    weighted = None
    form = _power_exp_form(weight)
    if isinstance(base, LogNormal) and form is not None and form[1] == math.inf:
        a = form[0]
        weighted = LogNormal(base.mu + a * base.sigma2, base.sigma2)
    elif isinstance(base, Gamma) and form is not None:
        a, b = form
        weighted = Gamma(base.shape + a, base.rate + (0.0 if b == math.inf
                                                      else 1.0 / b))
    return WeightedPair(base=base, weight=weight, normalizer=res.value,
                        weighted=weighted)


@dataclass(frozen=True)
class IntegrabilityResult:
    finite: bool
    value: float | None
    windows_used: int


def check_integrability(g, weight, tol=1e-8, cap=1e9, max_windows=64):
    """Decide whether the inverse-weighted mass I = int g(x)/w(x) dx is finite.

    The half-line is tiled with dyadic windows [2^m, 2^(m+1)] growing away
    from 1 in both directions. A side is declared divergent when three
    successive window contributions increase, or the running total passes
    cap; it is declared exhausted once contributions fall below a cutoff.
    Returns the value of I when finite.
    """

    def ratio(x):
        x = np.asarray(x, dtype=float)
        return np.exp(np.log(np.maximum(g(x), 0.0)) - weight.log(x))

    cutoff = tol / 100.0
    total = 0.0
    windows = 0
    for direction in (-1, 1):
        prev1 = prev2 = math.inf
        quiet = 0
        for m in range(max_windows):
            if direction < 0:
                a, b = 2.0 ** (-m - 1), 2.0 ** (-m)
            else:
                a, b = 2.0 ** m, 2.0 ** (m + 1)
            part = integrate_finite(ratio, a, b, tol=tol, max_panels=256)
            contrib = part.value
            windows += 1
            if not math.isfinite(contrib):
                return IntegrabilityResult(False, None, windows)
            total += contrib
            if total > cap:
                return IntegrabilityResult(False, None, windows)
            if contrib > prev1 > prev2:
                # three successive windows with growing mass: diverging tail
                return IntegrabilityResult(False, None, windows)
            prev2, prev1 = prev1, contrib
            if contrib < cutoff * max(1.0, total):
                quiet += 1
                if quiet >= 2:
                    break
            else:
                quiet = 0
        else:
            # neither settled nor clearly diverging within the window budget
            return IntegrabilityResult(False, None, windows)
    return IntegrabilityResult(True, total, windows)
