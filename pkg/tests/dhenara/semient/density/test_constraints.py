# ruff: noqa: S101
import math

import pytest
from pydantic import ValidationError

from dhenara.semient.density import (
    ConstraintFamilyEnum,
    ConstraintSet,
    ExponentialComponent,
    GammaComponent,
    SemiContinuousDensity,
)
from dhenara.semient.types import DomainError, InfeasibleConstraints


class TestConstraintSet:
    def test_mean_only_rejects_alpha2(self):
        with pytest.raises(ValidationError):
            ConstraintSet(family=ConstraintFamilyEnum.mean_only, alpha1=1.0, alpha2=0.1)

    def test_log_mean_requires_alpha2(self):
        with pytest.raises(ValidationError):
            ConstraintSet(family=ConstraintFamilyEnum.mean_and_log_mean, alpha1=1.0)

    def test_alpha1_must_be_positive(self):
        with pytest.raises(ValidationError):
            ConstraintSet.mean_only(0.0)

    def test_alpha2_may_be_negative(self):
        c = ConstraintSet.mean_and_log_mean(1.0, -2.0)
        assert c.is_log_mean

    def test_effective_moments(self):
        c = ConstraintSet.mean_and_log_mean(1.2, -0.3)
        m, log_mean = c.effective(0.4)
        assert m == pytest.approx(2.0)
        assert log_mean == pytest.approx(-0.5)

    def test_effective_accepts_zero_atom(self):
        assert ConstraintSet.mean_only(2.0).effective(0.0) == (2.0, None)

    @pytest.mark.parametrize("gamma", [1.0, -0.1])
    def test_effective_rejects_gamma(self, gamma):
        with pytest.raises(DomainError):
            ConstraintSet.mean_only(1.0).effective(gamma)

    def test_jensen_feasibility(self):
        feasible = ConstraintSet.mean_and_log_mean(1.0, -0.5)
        assert feasible.is_feasible_at(0.3)
        feasible.require_feasible_at(0.3)

        infeasible = ConstraintSet.mean_and_log_mean(1.0, 0.5)
        assert not infeasible.is_feasible_at(0.5)
        with pytest.raises(InfeasibleConstraints):
            infeasible.require_feasible_at(0.5)

    def test_mean_only_has_no_gap(self):
        c = ConstraintSet.mean_only(1.0)
        assert c.jensen_gap(0.5) is None
        assert c.is_feasible_at(0.5)


class TestFromDensity:
    def test_exponential_density(self):
        d = SemiContinuousDensity(gamma=0.25, g=ExponentialComponent(rate=2.0))
        c = ConstraintSet.from_density(d)
        assert c.family == ConstraintFamilyEnum.mean_only
        assert c.alpha1 == pytest.approx(0.375)

    def test_gamma_density(self):
        g = GammaComponent(shape=3.0, scale=0.5)
        c = ConstraintSet.from_density(SemiContinuousDensity(gamma=0.4, g=g))
        assert c.family == ConstraintFamilyEnum.mean_and_log_mean
        assert c.alpha1 == pytest.approx(0.6 * 1.5)
        assert c.alpha2 == pytest.approx(0.6 * g.log_mean)
        # The calibrating γ always satisfies Jensen's inequality
        assert c.jensen_gap(0.4) == pytest.approx(g.log_mean - math.log(g.mean))
