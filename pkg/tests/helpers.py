"""Shared oracles for the test suite.

Everything here is deliberately independent of the package's own
quadrature and Burr routines: raw numpy expressions integrated by scipy,
so the implementation and its checks never share a code path.
"""

import math

import numpy as np
from scipy import integrate, stats

from burrmix.mixture import (ChainState, Cluster, Hyperparams,
                             sample_new_cluster_censored,
                             sample_new_cluster_observed,
                             update_cluster_params, update_gamma, update_nu,
                             update_phi)
from burrmix.numerics import grid_inverse_cdf_sample


def q0_double_quad(t, phi, gamma, event=True, nu=1.0):
    """Brute-force (c, k) double integral of the new-cluster mass."""

    def inner(c):
        if event:
            def fk(k):
                return (c * k * t ** (c - 1.0) * (1.0 + t ** c) ** (-(k + 1.0))
                        * math.exp(-k / gamma) / gamma)
        else:
            def fk(k):
                return ((1.0 + t ** c) ** (-k)
                        * math.exp(-k / gamma) / gamma)
        val, _ = integrate.quad(fk, 0.0, np.inf, limit=200)
        return val / phi

    val, _ = integrate.quad(inner, 0.0, phi, limit=200)
    return nu * val


def make_state(times, events, z, params, nu, phi, gamma, hyper=None):
    """Hand-built ChainState; params is a list of (c, k) per cluster."""
    times = np.asarray(times, dtype=float)
    events = np.asarray(events, dtype=bool)
    z = np.asarray(z, dtype=np.intp)
    clusters = []
    for j, (c, k) in enumerate(params):
        members = [int(i) for i in np.nonzero(z == j)[0]]
        clusters.append(Cluster(c=c, k=k, members=members,
                                n_obs=int(events[members].sum())))
    state = ChainState(times, events, z, clusters, nu, phi, gamma,
                       hyper if hyper is not None else Hyperparams())
    state.check_invariants()
    return state


def cluster_c_density(ts, events, gamma):
    """Unnormalized collapsed c-marginal of a cluster holding (ts, events):
    c^n_obs * prod over observed of t^(c-1)/(1+t^c) * R(c)^-(n_obs+1)."""
    ts = np.asarray(ts, dtype=float)
    ev = np.asarray(events, dtype=bool)
    t_obs = ts[ev]
    n_obs = int(ev.sum())

    def dens(c):
        c = np.atleast_1d(np.asarray(c, dtype=float))[:, None]
        r = 1.0 / gamma + np.log1p(ts[None, :] ** c).sum(axis=1)
        psi = (t_obs[None, :] ** (c - 1.0)
               / (1.0 + t_obs[None, :] ** c)).prod(axis=1)
        return c[:, 0] ** n_obs * psi * r ** -(n_obs + 1.0)

    return dens


# ---------------------------------------------------------------------------
# Conditional-sampler distribution checks. Each returns its test statistics
# so the unit tests and the acceptance gate can share one implementation.

H_T, H_PHI, H_GAMMA = 1.0, 2.0, 1.0
# at t=1 the k-rate 1/gamma + ln 2 is the same for every c
H_K_MEAN = 2.0 / (1.0 + math.log(2.0))


def check_h_observed(n_draws, seed, n_bins=25):
    rng = np.random.default_rng(seed)
    cs = np.empty(n_draws)
    ks = np.empty(n_draws)
    for i in range(n_draws):
        cs[i], ks[i] = sample_new_cluster_observed(H_T, H_PHI, H_GAMMA, rng)

    def target(c):
        a = 1.0 / H_GAMMA + np.log1p(H_T ** c)
        return c * H_T ** (c - 1.0) / (1.0 + H_T ** c) / a ** 2

    edges = np.linspace(0.0, H_PHI, n_bins + 1)
    masses = np.array([integrate.quad(target, a, b)[0]
                       for a, b in zip(edges[:-1], edges[1:])])
    masses /= masses.sum()
    counts = np.histogram(cs, bins=edges)[0] / n_draws
    return {
        "l1": float(np.abs(counts - masses).sum()),
        "k_mean_err": abs(float(ks.mean()) - H_K_MEAN),
        "support_ok": bool(np.all((cs > 0) & (cs < H_PHI))),
    }


def check_h_censored(n_draws, seed):
    gamma = 1.0 / (2.0 - math.log(2.0))  # makes the k-rate exactly 2
    rng = np.random.default_rng(seed)
    cs = np.empty(n_draws)
    ks = np.empty(n_draws)
    for i in range(n_draws):
        cs[i], ks[i] = sample_new_cluster_censored(1.0, H_PHI, gamma, rng)
    ks_c = stats.kstest(cs, stats.uniform(0.0, H_PHI).cdf).statistic
    return {
        "ks_c": float(ks_c),
        "k_mean_err": abs(float(ks.mean()) - 0.5),
        "support_ok": bool(np.all((cs > 0) & (cs < H_PHI))),
    }


CLUSTER_TS = (0.6, 1.0, 1.9)
CLUSTER_PHI, CLUSTER_GAMMA = 2.5, 0.8


def check_cluster_update(n_draws, seed, n_oracle=10000):
    """Chained c*-resampling on a fixed 3-point cluster vs grid-sampler
    draws from the collapsed marginal (two-sample KS)."""
    events = (True, True, True)
    state = make_state(CLUSTER_TS, events, [0, 0, 0], [(1.0, 1.0)],
                       nu=1.0, phi=CLUSTER_PHI, gamma=CLUSTER_GAMMA)
    rng = np.random.default_rng(seed)
    chain = np.empty(n_draws)
    for i in range(n_draws):
        update_cluster_params(state, 0, rng)
        chain[i] = state.clusters[0].c
    dens = cluster_c_density(CLUSTER_TS, events, CLUSTER_GAMMA)
    rng_o = np.random.default_rng(seed + 1)
    oracle = np.array([grid_inverse_cdf_sample(dens, 0.0, CLUSTER_PHI, 2000,
                                               rng_o)
                       for _ in range(n_oracle)])
    return {"ks": float(stats.ks_2samp(chain, oracle).statistic)}


def nu_marginal_cdf_fn(a_nu, b_nu, n, n_star, hi=30.0, n_grid=4000):
    """cdf of the stationary nu law: prior x Antoniak factor, u integrated
    out numerically."""
    grid = np.linspace(1e-9, hi, n_grid)

    def unnorm(v):
        bval, _ = integrate.quad(lambda u: u ** v * (1.0 - u) ** (n - 1),
                                 0.0, 1.0)
        return (v ** (a_nu + n_star - 2.0) * (v + n)
                * math.exp(-b_nu * v) * bval)

    pdf = np.array([unnorm(v) for v in grid])
    cdf = np.concatenate([[0.0], np.cumsum(0.5 * (pdf[1:] + pdf[:-1])
                                           * np.diff(grid))])
    cdf /= cdf[-1]
    return lambda x: np.interp(x, grid, cdf)


def check_nu(n_draws, seed):
    n, n_star = 5, 2
    hyper = Hyperparams(a_nu=2.0, b_nu=2.0, b_gamma=1.0, b_phi=1.0)
    state = make_state([0.5, 1.0, 1.5, 2.0, 2.5],
                       [True] * 5, [0, 0, 0, 1, 1],
                       [(0.8, 1.0), (1.2, 2.0)],
                       nu=1.0, phi=2.0, gamma=1.0, hyper=hyper)
    rng = np.random.default_rng(seed)
    draws = np.empty(n_draws)
    for i in range(n_draws):
        update_nu(state, rng)
        draws[i] = state.nu
    cdf = nu_marginal_cdf_fn(hyper.a_nu, hyper.b_nu, n, n_star)
    return {"ks": float(stats.kstest(draws, cdf).statistic)}


def check_phi(n_draws, seed):
    state = make_state([1.0, 2.0], [True, True], [0, 1],
                       [(0.5, 1.0), (1.5, 2.0)],
                       nu=1.0, phi=2.0, gamma=1.0)
    rng = np.random.default_rng(seed)
    draws = np.empty(n_draws)
    for i in range(n_draws):
        update_phi(state, rng)
        draws[i] = state.phi
    # b* = max{b_phi=1, 1.5}, shape 2 + n* = 4
    ks = stats.kstest(draws, lambda x: 1.0 - (1.5 / x) ** 4).statistic
    return {"ks": float(ks), "above_scale": bool(np.all(draws > 1.5))}


def check_gamma(n_draws, seed):
    state = make_state([1.0, 2.0], [True, True], [0, 1],
                       [(0.5, 1.0), (1.5, 2.0)],
                       nu=1.0, phi=2.0, gamma=1.0)
    rng = np.random.default_rng(seed)
    draws = np.empty(n_draws)
    for i in range(n_draws):
        update_gamma(state, rng)
        draws[i] = state.gamma
    # shape n* + 2 = 4, scale b_gamma + (1 + 2) = 4
    ks = stats.kstest(draws, stats.invgamma(a=4.0, scale=4.0).cdf).statistic
    return {"ks": float(ks), "mean_err": abs(float(draws.mean()) - 4.0 / 3.0)}
