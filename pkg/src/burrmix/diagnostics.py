"""Sampler validation utilities.

The joint-distribution check runs the Gibbs kernel as a data-augmented
prior simulator: alternating one sweep with regeneration of the data from
the current components must leave the prior law of (nu, gamma, phi, and
the partition) invariant, so its long-run moments must match direct prior
draws. Disagreement beyond combined Monte Carlo error flags a broken
full conditional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import burr_sample
from .mixture import ChainState, Cluster, Hyperparams, gibbs_sweep

# Burr draws under extreme prior shapes can denormalize; times are clamped
# where logs and powers stay finite.
_TIME_FLOOR = 1e-250
_TIME_CEIL = 1e250

_STATS = ("nu", "gamma", "phi", "n_clusters")


def crp_partition(n, nu, rng):
    """Sequential Chinese-restaurant assignment for n items at strength nu."""
    if n < 1:
        raise ValueError("need at least one item")
    if not (nu > 0):
        raise ValueError("nu must be positive")
    z = np.zeros(n, dtype=np.intp)
    sizes = [1]
    for i in range(1, n):
        total = i + nu
        r = rng.random() * total
        if r < nu:
            z[i] = len(sizes)
            sizes.append(1)
        else:
            j = int(np.searchsorted(np.cumsum(sizes), r - nu, side="right"))
            z[i] = j
            sizes[j] += 1
    return z, sizes


def prior_state(n, hyper=None, rng=None):
    """Draw a full ChainState (parameters, partition, data) from the prior.

    All observations are generated as exact events; censoring plays no
    role in the joint check.
    """
    hyper = hyper if hyper is not None else Hyperparams()
    rng = rng if rng is not None else np.random.default_rng(0)
    nu = rng.gamma(hyper.a_nu, 1.0 / hyper.b_nu)
    gamma = 1.0 / rng.gamma(2.0, 1.0 / hyper.b_gamma)
    phi = hyper.b_phi * (1.0 - rng.random()) ** -0.5
    z, sizes = crp_partition(n, nu, rng)
    clusters = []
    times = np.empty(n)
    for j, size in enumerate(sizes):
        members = np.nonzero(z == j)[0]
        c = rng.uniform(0.0, phi)
        k = rng.exponential(gamma)
        times[members] = np.clip(burr_sample(c, k, rng, size=members.size),
                                 _TIME_FLOOR, _TIME_CEIL)
        clusters.append(Cluster(c=c, k=k, members=list(map(int, members)),
                                n_obs=members.size))
    events = np.ones(n, dtype=bool)
    return ChainState(times, events, z, clusters, nu, phi, gamma, hyper)


def _record(state, out):
    out["nu"].append(state.nu)
    out["gamma"].append(state.gamma)
    out["phi"].append(state.phi)
    out["n_clusters"].append(state.n_clusters)


def marginal_conditional(n, n_draws, hyper=None, rng=None):
    """Independent prior draws of the monitored statistics."""
    rng = rng if rng is not None else np.random.default_rng(0)
    out = {k: [] for k in _STATS}
    for _ in range(n_draws):
        _record(prior_state(n, hyper, rng), out)
    return {k: np.asarray(v, dtype=float) for k, v in out.items()}


def regenerate_data(state, rng):
    """Redraw every observation from its current component, in place."""
    for cl in state.clusters:
        members = np.asarray(cl.members, dtype=np.intp)
        draws = burr_sample(cl.c, cl.k, rng, size=members.size)
        state.times[members] = np.clip(draws, _TIME_FLOOR, _TIME_CEIL)


def successive_conditional(n, n_sweeps, hyper=None, rng=None):
    """Alternate one Gibbs sweep with data regeneration, recording the
    monitored statistics after each cycle."""
    rng = rng if rng is not None else np.random.default_rng(0)
    state = prior_state(n, hyper, rng)
    out = {k: [] for k in _STATS}
    for _ in range(n_sweeps):
        gibbs_sweep(state, rng)
        regenerate_data(state, rng)
        _record(state, out)
    return {k: np.asarray(v, dtype=float) for k, v in out.items()}


def batch_means_se(x, n_batches=40):
    """Monte Carlo standard error of a correlated series via batch means."""
    x = np.asarray(x, dtype=float)
    if x.size < 2 * n_batches:
        raise ValueError("series too short for the requested batch count")
    m = x.size // n_batches
    batches = x[:m * n_batches].reshape(n_batches, m).mean(axis=1)
    return float(np.std(batches, ddof=1) / math.sqrt(n_batches))


@dataclass(frozen=True)
class MomentComparison:
    stat: str
    mean_direct: float
    se_direct: float
    mean_chain: float
    se_chain: float

    @property
    def z_score(self):
        denom = math.hypot(self.se_direct, self.se_chain)
        return (self.mean_chain - self.mean_direct) / denom


def compare_prior_reproduction(direct, chain, n_batches=40):
    """Per-statistic moment comparison between independent prior draws and
    the data-augmented Gibbs series. Direct draws are independent, so their
    SE is the plain standard error; the chain side uses batch means."""
    out = []
    for key in _STATS:
        a = np.asarray(direct[key], dtype=float)
        b = np.asarray(chain[key], dtype=float)
        out.append(MomentComparison(
            stat=key,
            mean_direct=float(a.mean()),
            se_direct=float(a.std(ddof=1) / math.sqrt(a.size)),
            mean_chain=float(b.mean()),
            se_chain=batch_means_se(b, n_batches=n_batches)))
    return out
