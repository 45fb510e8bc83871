"""Metropolis-Hastings de-biasing of weighted samples.

Draws from the observed (weighted) density g serve as independence
proposals; accepting y over the current state x with probability
min{1, w(x)/w(y)} turns the chain's stationary law into the un-weighted
density f(x) proportional to g(x)/w(x). Only weight evaluations are
needed, never g itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .weighting import WeightDomainError, WeightFn


def acceptance_prob(weight, x_cur, y_prop):
    """min{1, w(x_cur) / w(y_prop)} computed through log weights."""
    if not (np.isfinite(x_cur) and x_cur > 0):
        raise WeightDomainError("current state must lie in (0, inf)")
    if not (np.isfinite(y_prop) and y_prop > 0):
        raise WeightDomainError("proposal must lie in (0, inf)")
    return math.exp(min(0.0, weight.log(x_cur) - weight.log(y_prop)))


@dataclass
class DebiasChain:
    """Single-state acceptance chain; step() feeds one proposal at a time."""

    weight: WeightFn
    current: float | None = None
    accepted: int = 0
    proposed: int = 0
    _log_w_cur: float = field(default=math.nan, repr=False)

    def __post_init__(self):
        if self.current is not None:
            self._log_w_cur = float(self.weight.log(self.current))

    def step(self, y_prop, rng):
        """Advance by one proposal; returns the (possibly unchanged) state."""
        y = float(y_prop)
        if not (math.isfinite(y) and y > 0):
            raise WeightDomainError("proposal must lie in (0, inf)")
        self.proposed += 1
        log_w_y = float(self.weight.log(y))
        if self.current is None:
            accept = True
        else:
            alpha = math.exp(min(0.0, self._log_w_cur - log_w_y))
            accept = rng.random() < alpha
        if accept:
            self.current = y
            self._log_w_cur = log_w_y
            self.accepted += 1
        return self.current

    @property
    def acceptance_rate(self):
        return self.accepted / self.proposed if self.proposed else math.nan


def debias_stream(proposals, weight, rng, x0=None, thin=1):
    """Run the acceptance chain over a whole proposal stream.

    Returns the chain path (one state per proposal), thinned by `thin`.
    With x0 omitted the chain starts at the first proposal.
    """
    if thin < 1:
        raise ValueError("thin must be >= 1")
    proposals = np.asarray(proposals, dtype=float)
    if proposals.ndim != 1 or proposals.size == 0:
        raise ValueError("proposals must be a nonempty 1-d array")
    chain = DebiasChain(weight, current=None if x0 is None else float(x0))
    path = np.empty(proposals.size)
    for i, y in enumerate(proposals):
        path[i] = chain.step(y, rng)
    return path[::thin].copy()
