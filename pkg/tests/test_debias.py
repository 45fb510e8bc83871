import math

import numpy as np
import pytest
from scipy import stats

from burrmix.debias import DebiasChain, acceptance_prob, debias_stream
from burrmix.distributions import Gamma, LogNormal
from burrmix.weighting import (LengthBias, PowerExp, UnitWeight,
                               WeightDomainError)


class StubRng:
    def __init__(self, u):
        self.u = u

    def random(self):
        return self.u


def test_acceptance_prob_examples():
    assert acceptance_prob(LengthBias(), 2.0, 1.0) == 1.0
    assert acceptance_prob(LengthBias(), 1.0, 1.0) == 1.0
    assert abs(acceptance_prob(LengthBias(), 1.0, 2.0) - 0.5) < 1e-15
    assert abs(acceptance_prob(PowerExp(0.0, 1.0), 2.0, 1.0)
               - math.exp(-1.0)) < 1e-15
    assert acceptance_prob(PowerExp(0.0, 1.0), 1.0, 2.0) == 1.0


def test_acceptance_prob_unit_weight():
    rng = np.random.default_rng(0)
    for _ in range(50):
        x, y = rng.uniform(0.01, 10.0, size=2)
        assert acceptance_prob(UnitWeight(), x, y) == 1.0


def test_acceptance_prob_domain():
    with pytest.raises(WeightDomainError):
        acceptance_prob(LengthBias(), 0.0, 1.0)
    with pytest.raises(WeightDomainError):
        acceptance_prob(LengthBias(), 1.0, -1.0)
    with pytest.raises(WeightDomainError):
        acceptance_prob(LengthBias(), math.inf, 1.0)


def test_acceptance_product_identity():
    # alpha(x,y) * alpha(y,x) = min(w(x), w(y))^2 / (w(x) w(y))
    w = PowerExp(1.5, 3.0)
    rng = np.random.default_rng(1)
    for _ in range(200):
        x, y = rng.uniform(0.05, 8.0, size=2)
        prod = acceptance_prob(w, x, y) * acceptance_prob(w, y, x)
        wx, wy = w(x), w(y)
        assert abs(prod - min(wx, wy) ** 2 / (wx * wy)) < 1e-12


def test_chain_first_proposal_always_accepted():
    chain = DebiasChain(LengthBias())
    out = chain.step(3.0, StubRng(0.999999))
    assert out == 3.0
    assert chain.accepted == 1 and chain.proposed == 1


def test_chain_sure_accept_moves():
    # alpha = 1 transitions must not depend on the uniform draw
    chain = DebiasChain(LengthBias(), current=2.0)
    assert chain.step(1.0, StubRng(0.0)) == 1.0
    chain = DebiasChain(LengthBias(), current=2.0)
    assert chain.step(1.0, StubRng(0.999999)) == 1.0


def test_chain_reject_keeps_state():
    # alpha = w(1)/w(2) = 0.5 under length bias
    chain = DebiasChain(LengthBias(), current=1.0)
    assert chain.step(2.0, StubRng(0.75)) == 1.0
    assert chain.accepted == 0 and chain.proposed == 1
    assert chain.step(2.0, StubRng(0.25)) == 2.0
    assert chain.accepted == 1 and chain.proposed == 2


def test_chain_acceptance_rate_empty():
    assert math.isnan(DebiasChain(UnitWeight()).acceptance_rate)


def test_chain_rejects_bad_proposal():
    chain = DebiasChain(LengthBias(), current=1.0)
    with pytest.raises(WeightDomainError):
        chain.step(0.0, StubRng(0.5))
    with pytest.raises(WeightDomainError):
        chain.step(math.nan, StubRng(0.5))


def test_stream_validation():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        debias_stream([], LengthBias(), rng)
    with pytest.raises(ValueError):
        debias_stream(np.ones((2, 2)), LengthBias(), rng)
    with pytest.raises(ValueError):
        debias_stream([1.0, 2.0], LengthBias(), rng, thin=0)


def test_stream_unit_weight_is_identity():
    proposals = np.random.default_rng(2).uniform(0.1, 5.0, size=100)
    path = debias_stream(proposals, UnitWeight(), np.random.default_rng(3))
    assert np.array_equal(path, proposals)


def test_stream_thinning_and_length():
    proposals = np.linspace(0.1, 1.0, 10)
    path = debias_stream(proposals, UnitWeight(), np.random.default_rng(0),
                         thin=3)
    assert np.array_equal(path, proposals[::3])


def test_stream_deterministic_per_seed():
    proposals = np.random.default_rng(4).lognormal(0.5, 0.7, size=500)
    a = debias_stream(proposals, LengthBias(), np.random.default_rng(9))
    b = debias_stream(proposals, LengthBias(), np.random.default_rng(9))
    assert np.array_equal(a, b)


def test_stream_lognormal_length_bias():
    # proposals from LN(0.5, 0.5); the de-biased law is LN(0, 0.5)
    rng = np.random.default_rng(5)
    proposals = LogNormal(0.5, 0.5).sample(rng, size=100000)
    path = debias_stream(proposals, LengthBias(), rng)
    target = stats.lognorm(s=math.sqrt(0.5)).cdf
    assert stats.kstest(path, target).statistic < 0.05


def test_stream_acceptance_rate_range():
    rng = np.random.default_rng(6)
    proposals = LogNormal(0.5, 0.5).sample(rng, size=100000)
    chain = DebiasChain(LengthBias())
    for y in proposals:
        chain.step(y, rng)
    assert 0.5 < chain.acceptance_rate < 1.0


def test_stream_gamma_exponential_tilt():
    # proposals from Gamma(1, rate 2) = observed law of Exp(1) under e^{-x}
    rng = np.random.default_rng(7)
    proposals = Gamma(1.0, 2.0).sample(rng, size=5000)
    path = debias_stream(proposals, PowerExp(0.0, 1.0), rng)
    assert stats.kstest(path, stats.expon().cdf).statistic < 0.05
