# ruff: noqa: S101
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhenara.semient.density import ConstraintSet, ExponentialComponent, GammaComponent, SemiContinuousDensity
from dhenara.semient.inner import (
    InnerSolution,
    gamma_shape_from_gap,
    h_of_gamma,
    inner_exponential,
    inner_gamma,
    solve_inner,
)
from dhenara.semient.numerics import digamma_minus_log
from dhenara.semient.types import DomainError, InfeasibleConstraints


class TestInnerExponential:
    def test_rate_and_entropy(self):
        inner = inner_exponential(ConstraintSet.mean_only(1.5), 0.25)
        assert inner.m == pytest.approx(2.0)
        assert inner.g.rate == pytest.approx(0.5)
        assert inner.h_g == pytest.approx(1.0 + math.log(2.0))

    def test_rejects_log_mean_family(self):
        with pytest.raises(DomainError):
            inner_exponential(ConstraintSet.mean_and_log_mean(1.0, -1.0), 0.5)

    @pytest.mark.parametrize("gamma", [0.0, 1.0])
    def test_rejects_closed_endpoints(self, gamma):
        with pytest.raises(DomainError):
            inner_exponential(ConstraintSet.mean_only(1.0), gamma)


class TestGammaShapeFromGap:
    @pytest.mark.parametrize("shape", [1e-4, 0.3, 1.0, 3.0, 250.0, 1e6])
    def test_recovers_shape(self, shape):
        assert gamma_shape_from_gap(digamma_minus_log(shape)) == pytest.approx(shape, rel=1e-9)

    @pytest.mark.parametrize("gap", [0.0, 0.1])
    def test_non_negative_gap_is_infeasible(self, gap):
        with pytest.raises(InfeasibleConstraints):
            gamma_shape_from_gap(gap)

    @settings(max_examples=50)
    @given(st.floats(min_value=-20.0, max_value=-1e-8))
    def test_solution_satisfies_equation(self, gap):
        shape = gamma_shape_from_gap(gap)
        assert digamma_minus_log(shape) == pytest.approx(gap, rel=1e-8, abs=1e-14)


class TestInnerGamma:
    def test_recovers_calibrating_component(self):
        g = GammaComponent(shape=2.0, scale=1.5)
        gamma = 0.3
        c = ConstraintSet.mean_and_log_mean((1 - gamma) * g.mean, (1 - gamma) * g.log_mean)
        inner = inner_gamma(c, gamma)
        assert inner.g.shape == pytest.approx(2.0, rel=1e-9)
        assert inner.g.scale == pytest.approx(1.5, rel=1e-9)
        assert inner.h_g == pytest.approx(g.entropy, rel=1e-10)
        assert inner.jensen_gap == pytest.approx(g.log_mean - math.log(g.mean))

    @settings(max_examples=1000, deadline=None)
    @given(
        st.floats(min_value=0.05, max_value=100.0),
        st.floats(min_value=1e-3, max_value=1e3),
        st.floats(min_value=0.01, max_value=0.99),
    )
    def test_round_trip_through_moments(self, shape, scale, gamma):
        d = SemiContinuousDensity(gamma=gamma, g=GammaComponent(shape=shape, scale=scale))
        inner = inner_gamma(ConstraintSet.from_density(d), gamma)
        assert inner.g.shape == pytest.approx(shape, rel=1e-8)
        assert inner.g.scale == pytest.approx(scale, rel=1e-8)

    def test_jensen_violation(self):
        with pytest.raises(InfeasibleConstraints):
            inner_gamma(ConstraintSet.mean_and_log_mean(1.0, 0.5), 0.5)

    def test_rejects_mean_only_family(self):
        with pytest.raises(DomainError):
            inner_gamma(ConstraintSet.mean_only(1.0), 0.5)


class TestDispatch:
    def test_solve_inner_picks_family(self):
        assert isinstance(solve_inner(ConstraintSet.mean_only(1.0), 0.5).g, ExponentialComponent)
        assert isinstance(solve_inner(ConstraintSet.mean_and_log_mean(1.0, -1.0), 0.5).g, GammaComponent)

    def test_h_of_gamma_increases_with_the_atom_for_exponential(self):
        # h(γ) = 1 + log(α₁/(1−γ))
        c = ConstraintSet.mean_only(1.0)
        assert h_of_gamma(c, 0.6) > h_of_gamma(c, 0.2)

    @given(st.floats(min_value=1e-3, max_value=1e3), st.floats(min_value=1e-3, max_value=0.999))
    def test_h_of_gamma_for_exponential(self, alpha1, gamma):
        c = ConstraintSet.mean_only(alpha1)
        expected = 1 + math.log(alpha1) - math.log(1 - gamma)
        assert h_of_gamma(c, gamma) == pytest.approx(expected, abs=1e-12)

    def test_inner_solution_checks_moments(self):
        with pytest.raises(ValueError):
            InnerSolution(g=ExponentialComponent(rate=1.0), h_g=1.0, m=2.0)
