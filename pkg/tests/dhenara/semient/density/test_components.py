# ruff: noqa: S101
import math

import pytest
from pydantic import TypeAdapter, ValidationError
from scipy import integrate

from dhenara.semient.density import ContinuousComponent, ExponentialComponent, GammaComponent


def exp_family_pdf(component, y):
    lm = component.multipliers()
    exponent = -1.0 - lm.lambda0 - lm.lambda1 * y
    if lm.lambda2 is not None:
        exponent -= lm.lambda2 * math.log(y)
    return math.exp(exponent)


class TestExponentialComponent:
    def test_moments(self):
        g = ExponentialComponent(rate=0.5)
        assert g.mean == 2.0
        assert g.variance == 4.0
        assert g.log_mean == pytest.approx(-0.5772156649015329 + math.log(2.0), abs=1e-14)

    def test_multipliers_reproduce_pdf(self):
        g = ExponentialComponent(rate=1.7)
        assert g.multipliers().lambda2 is None
        for y in (0.1, 1.0, 3.5):
            assert exp_family_pdf(g, y) == pytest.approx(float(g.pdf(y)), rel=1e-12)

    def test_rejects_non_positive_rate(self):
        with pytest.raises(ValidationError):
            ExponentialComponent(rate=0.0)


class TestGammaComponent:
    def test_moments(self):
        g = GammaComponent(shape=3.0, scale=0.5)
        assert g.mean == pytest.approx(1.5)
        assert g.variance == pytest.approx(0.75)

    def test_log_mean_by_quadrature(self):
        g = GammaComponent(shape=2.5, scale=1.3)
        value, _ = integrate.quad(lambda y: math.log(y) * float(g.pdf(y)), 0, math.inf)
        assert g.log_mean == pytest.approx(value, abs=1e-8)

    def test_multipliers_reproduce_pdf(self):
        g = GammaComponent(shape=2.5, scale=1.3)
        for y in (0.2, 1.0, 4.0):
            assert exp_family_pdf(g, y) == pytest.approx(float(g.pdf(y)), rel=1e-11)

    def test_cdf_is_monotone(self):
        g = GammaComponent(shape=0.7, scale=2.0)
        assert g.cdf(0.0) == 0.0
        assert g.cdf(1.0) < g.cdf(2.0) < 1.0


class TestContinuousComponentUnion:
    def test_discriminates_on_kind(self):
        adapter = TypeAdapter(ContinuousComponent)
        assert isinstance(adapter.validate_python({"kind": "exponential", "rate": 2.0}), ExponentialComponent)
        g = adapter.validate_python({"kind": "gamma", "shape": 2.0, "scale": 1.0})
        assert isinstance(g, GammaComponent)

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            TypeAdapter(ContinuousComponent).validate_python({"kind": "weibull", "shape": 2.0})
