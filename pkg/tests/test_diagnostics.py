import math

import numpy as np
import pytest
from scipy import stats

import helpers
from burrmix.diagnostics import (MomentComparison, batch_means_se,
                                 compare_prior_reproduction, crp_partition,
                                 marginal_conditional, prior_state,
                                 regenerate_data, successive_conditional)
from burrmix.mixture import Hyperparams


def test_crp_partition_layout():
    rng = np.random.default_rng(0)
    z, sizes = crp_partition(12, 1.0, rng)
    assert z[0] == 0
    assert sum(sizes) == 12
    assert z.max() == len(sizes) - 1
    for j, size in enumerate(sizes):
        assert int((z == j).sum()) == size


def test_crp_partition_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        crp_partition(0, 1.0, rng)
    with pytest.raises(ValueError):
        crp_partition(3, 0.0, rng)


def test_crp_two_item_split_probability():
    # the second item opens a new table with probability nu / (nu + 1)
    rng = np.random.default_rng(1)
    nu = 1.5
    m = 20000
    splits = sum(len(crp_partition(2, nu, rng)[1]) == 2 for _ in range(m))
    assert abs(splits / m - 0.6) < 0.015


def test_crp_expected_cluster_count():
    rng = np.random.default_rng(2)
    m = 20000
    counts = np.array([len(crp_partition(10, 1.0, rng)[1])
                       for _ in range(m)])
    expect = sum(1.0 / (1.0 + i) for i in range(10))
    se = counts.std(ddof=1) / math.sqrt(m)
    assert abs(counts.mean() - expect) <= 3.0 * se


def test_prior_state_marginals():
    rng = np.random.default_rng(3)
    n_draws = 10000
    nus = np.empty(n_draws)
    phis = np.empty(n_draws)
    gammas = np.empty(n_draws)
    for i in range(n_draws):
        st = prior_state(6, rng=rng)
        nus[i], phis[i], gammas[i] = st.nu, st.phi, st.gamma
    assert stats.kstest(nus, stats.gamma(a=2.0, scale=0.5).cdf).statistic < 0.02
    assert stats.kstest(phis, lambda x: 1.0 - x ** -2.0).statistic < 0.02
    assert stats.kstest(gammas,
                        stats.invgamma(a=2.0, scale=1.0).cdf).statistic < 0.02


def test_prior_state_structure():
    st = prior_state(15, rng=np.random.default_rng(4))
    st.check_invariants()
    assert st.events.all()
    assert np.all(st.times > 0)
    assert st.hyper == Hyperparams()


def test_regenerate_data_component_law():
    n = 10000
    state = helpers.make_state(np.full(n, 0.5), [True] * n, [0] * n,
                               [(2.0, 3.0)], nu=1.0, phi=3.0, gamma=1.0)
    z_before = state.z.copy()
    regenerate_data(state, np.random.default_rng(5))
    assert np.array_equal(state.z, z_before)
    assert state.n_clusters == 1
    ks = stats.kstest(state.times, stats.burr12(c=2.0, d=3.0).cdf).statistic
    assert ks < 0.02
    state.check_invariants()


def test_batch_means_se_iid_scale():
    rng = np.random.default_rng(6)
    x = rng.normal(size=4000)
    se = batch_means_se(x)
    ratio = se / (1.0 / math.sqrt(4000))
    assert 0.8 < ratio < 1.25


def test_batch_means_se_short_series():
    with pytest.raises(ValueError):
        batch_means_se(np.ones(79), n_batches=40)


def test_moment_comparison_z_score():
    cmp = MomentComparison("nu", 1.0, 0.03, 1.1, 0.04)
    assert cmp.z_score == pytest.approx(0.1 / math.hypot(0.03, 0.04))


def test_marginal_conditional_shapes():
    out = marginal_conditional(5, 300, rng=np.random.default_rng(7))
    assert set(out) == {"nu", "gamma", "phi", "n_clusters"}
    assert all(v.shape == (300,) for v in out.values())
    assert out["n_clusters"].min() >= 1.0


def test_successive_conditional_shapes():
    out = successive_conditional(4, 200, rng=np.random.default_rng(8))
    assert set(out) == {"nu", "gamma", "phi", "n_clusters"}
    assert all(v.shape == (200,) for v in out.values())
    assert np.all(out["phi"] >= 1.0)


def test_prior_reproduction_smoke():
    # a light version of the joint check: loose bound, small series
    direct = marginal_conditional(4, 4000, rng=np.random.default_rng(9))
    chain = successive_conditional(4, 4000, rng=np.random.default_rng(10))
    comps = compare_prior_reproduction(direct, chain)
    assert [c.stat for c in comps] == ["nu", "gamma", "phi", "n_clusters"]
    for c in comps:
        assert c.se_direct > 0 and c.se_chain > 0
        assert abs(c.z_score) < 6.0
