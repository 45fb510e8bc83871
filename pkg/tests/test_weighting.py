import math

import numpy as np
import pytest
from scipy import integrate

from burrmix.distributions import Exponential, Gamma, LogNormal, Pareto
from burrmix.weighting import (IntegrabilityResult, LengthBias, PowerExp,
                               UnitWeight, WeightDomainError,
                               WeightingInfeasibleError, check_integrability,
                               make_weighted)


def test_weight_eval_examples():
    assert UnitWeight()(5.0) == 1.0
    assert LengthBias()(3.0) == 3.0
    assert abs(PowerExp(0.0, 1.0)(1.0) - math.exp(-1.0)) < 1e-15
    assert abs(PowerExp(2.0, 2.0)(1.0) - math.exp(-0.5)) < 1e-15


def test_weight_log_matches_eval():
    x = np.geomspace(1e-3, 1e3, 30)
    for w in (UnitWeight(), LengthBias(), PowerExp(1.5, 4.0),
              PowerExp(2.0, math.inf)):
        assert np.allclose(np.log(w(x)), w.log(x), atol=1e-13)


def test_weight_describe():
    assert UnitWeight().describe() == "unit"
    assert LengthBias().describe() == "length"
    assert PowerExp(0.0, 1.0).describe() == "powexp:0,1"
    assert PowerExp(2.0, math.inf).describe() == "powexp:2,inf"


def test_weight_domain():
    for w in (UnitWeight(), LengthBias(), PowerExp(1.0, 1.0)):
        with pytest.raises(WeightDomainError):
            w(0.0)
        with pytest.raises(WeightDomainError):
            w.log(-1.0)
    with pytest.raises(WeightDomainError):
        PowerExp(-1.0, 1.0)
    with pytest.raises(WeightDomainError):
        PowerExp(1.0, 0.0)


def test_make_weighted_gamma_powexp():
    pair = make_weighted(Gamma(1.0, 1.0), PowerExp(0.0, 1.0))
    assert abs(pair.normalizer - 0.5) < 1e-9
    assert pair.weighted == Gamma(1.0, 2.0)


def test_make_weighted_lognormal_length():
    pair = make_weighted(LogNormal(0.0, 0.5), LengthBias())
    assert abs(pair.normalizer - math.exp(0.25)) < 1e-9
    assert pair.weighted == LogNormal(0.5, 0.5)


def test_make_weighted_unit_is_identity():
    base = Gamma(2.0, 1.5)
    pair = make_weighted(base, UnitWeight())
    assert abs(pair.normalizer - 1.0) < 1e-9
    x = np.linspace(0.1, 8.0, 40)
    assert np.allclose(pair.g(x), base.pdf(x), atol=1e-9)


def test_weighted_density_integrates_to_one():
    cases = [
        (Gamma(1.0, 1.0), PowerExp(0.0, 1.0)),
        (LogNormal(0.0, 0.5), LengthBias()),
        (LogNormal(0.3, 0.9), PowerExp(2.0, math.inf)),
        (Gamma(2.0, 1.0), LengthBias()),
    ]
    for base, weight in cases:
        pair = make_weighted(base, weight)
        mass, _ = integrate.quad(pair.g, 0.0, np.inf, limit=200)
        assert abs(mass - 1.0) < 1e-6


def test_weighted_identity_on_grid():
    """Z * g(x) and w(x) f(x) agree pointwise."""
    pair = make_weighted(LogNormal(0.0, 0.5), LengthBias())
    x = np.geomspace(1e-3, 1e3, 200)
    lhs = pair.g(x) * pair.normalizer
    rhs = pair.weight(x) * pair.base.pdf(x)
    assert np.max(np.abs(lhs - rhs)) < 1e-8


def test_conjugate_forms_match_direct_ratio():
    cases = [
        (Gamma(1.0, 1.0), PowerExp(0.0, 1.0)),
        (Gamma(2.0, 3.0), PowerExp(1.0, 2.0)),
        (LogNormal(0.0, 0.5), LengthBias()),
        (LogNormal(-0.2, 1.1), PowerExp(3.0, math.inf)),
    ]
    for base, weight in cases:
        pair = make_weighted(base, weight)
        assert pair.weighted is not None
        x = np.geomspace(0.05, 20.0, 120)
        assert np.max(np.abs(pair.g(x) - pair.weighted.pdf(x))) < 1e-6


def test_no_conjugate_form_for_lognormal_with_decay():
    pair = make_weighted(LogNormal(0.0, 1.0), PowerExp(1.0, 2.0))
    assert pair.weighted is None
    mass, _ = integrate.quad(pair.g, 0.0, np.inf, limit=200)
    assert abs(mass - 1.0) < 1e-6


def test_make_weighted_infeasible():
    # Pareto(2, 1) has no second moment, so E[x^2 w] blows up
    with pytest.raises(WeightingInfeasibleError):
        make_weighted(Pareto(2.0, 1.0), PowerExp(2.0, math.inf))


def test_check_integrability_lognormal_length():
    pair = make_weighted(LogNormal(0.0, 0.5), LengthBias())
    res = check_integrability(pair.g, pair.weight)
    assert res.finite
    assert abs(res.value - math.exp(-0.25)) < 1e-6


def test_check_integrability_unit():
    pair = make_weighted(LogNormal(0.0, 0.5), UnitWeight())
    res = check_integrability(pair.g, pair.weight)
    assert res.finite
    assert abs(res.value - 1.0) < 1e-6


def test_check_integrability_divergent():
    # g = Exp(1) observed under w = x^2: int g/w ~ int 1/x^2 near 0
    res = check_integrability(Exponential(1.0).pdf, PowerExp(2.0, math.inf))
    assert isinstance(res, IntegrabilityResult)
    assert not res.finite
    assert res.value is None
    assert res.windows_used >= 3
