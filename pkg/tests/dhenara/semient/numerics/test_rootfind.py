# ruff: noqa: S101
import math

import numpy as np
import pytest

from dhenara.semient.numerics import Bracket, finite_difference_jacobian, solve_bracketed, solve_newton_system
from dhenara.semient.types import DomainError, InfeasibleIterate, MaxIterations, NoSignChange, SingularJacobian


class TestBracket:
    def test_around_evaluates_endpoints(self):
        bracket = Bracket.around(lambda x: x - 1.0, 0.0, 3.0)
        assert bracket.f_lo == -1.0
        assert bracket.f_hi == 2.0
        assert bracket.width == 3.0

    def test_around_without_sign_change(self):
        with pytest.raises(NoSignChange):
            Bracket.around(lambda x: x * x + 1.0, -1.0, 1.0)

    def test_around_with_nan(self):
        with pytest.raises(NoSignChange):
            Bracket.around(lambda x: float("nan"), 0.0, 1.0)

    def test_around_rejects_reversed_interval(self):
        with pytest.raises(DomainError):
            Bracket.around(lambda x: x, 1.0, 0.0)

    def test_direct_construction_validates(self):
        with pytest.raises(ValueError):
            Bracket(lo=0.0, hi=1.0, f_lo=1.0, f_hi=2.0)


class TestSolveBracketed:
    def test_square_root_of_two(self):
        report = solve_bracketed(lambda x: x * x - 2.0, (0.0, 2.0))
        assert report.converged
        assert report.root == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert report.residual_norm <= 1e-11

    def test_exact_zero_at_endpoint_returns_immediately(self):
        report = solve_bracketed(lambda x: x - 1.0, (1.0, 2.0))
        assert report.root == 1.0
        assert report.iterations == 0

    def test_accepts_validated_bracket(self):
        bracket = Bracket.around(math.cos, 0.0, 3.0)
        report = solve_bracketed(math.cos, bracket)
        assert report.root == pytest.approx(math.pi / 2, abs=1e-12)

    def test_steep_function(self):
        report = solve_bracketed(lambda x: math.log((1 - x) / x), (1e-10, 1 - 1e-10))
        assert report.root == pytest.approx(0.5, abs=1e-12)

    def test_budget_exhausted(self):
        with pytest.raises(MaxIterations):
            solve_bracketed(lambda x: x**3 - 0.3, (0.0, 1.0), tol=1e-15, max_iter=2)

    def test_rejects_non_positive_tolerance(self):
        with pytest.raises(DomainError):
            solve_bracketed(lambda x: x, (-1.0, 1.0), tol=0.0)


class TestSolveNewtonSystem:
    @staticmethod
    def circle_line(x):
        return np.array([x[0] ** 2 + x[1] ** 2 - 4.0, x[0] - x[1]])

    def test_converges_with_finite_difference_jacobian(self):
        report = solve_newton_system(self.circle_line, [1.0, 1.5])
        assert report.converged
        assert report.solution == pytest.approx((math.sqrt(2.0), math.sqrt(2.0)), abs=1e-9)
        assert report.residual_norm <= 1e-10

    def test_converges_with_analytic_jacobian(self):
        def jac(x):
            return np.array([[2 * x[0], 2 * x[1]], [1.0, -1.0]])

        report = solve_newton_system(self.circle_line, [3.0, 0.5], J=jac)
        assert report.solution == pytest.approx((math.sqrt(2.0), math.sqrt(2.0)), abs=1e-9)

    def test_scalar_system(self):
        report = solve_newton_system(lambda x: np.array([math.exp(x[0]) - 2.0]), 0.0)
        assert report.root == pytest.approx(math.log(2.0), abs=1e-10)

    def test_singular_jacobian(self):
        def degenerate(x):
            return np.array([x[0] + x[1] - 1.0, 2 * x[0] + 2 * x[1] - 2.0 + 1e-3])

        with pytest.raises(SingularJacobian):
            solve_newton_system(degenerate, [0.0, 0.0], J=lambda x: np.array([[1.0, 1.0], [2.0, 2.0]]))

    def test_infeasible_start(self):
        with pytest.raises(InfeasibleIterate):
            solve_newton_system(self.circle_line, [-1.0, 1.0], feasible=lambda x: x[0] > 0)

    def test_feasibility_is_kept_by_damping(self):
        # The full Newton step from x=3 leaves the domain
        report = solve_newton_system(
            lambda x: np.array([math.log(x[0]) + 2.0]),
            [3.0],
            feasible=lambda x: x[0] > 0,
        )
        assert report.root == pytest.approx(math.exp(-2.0), rel=1e-9)

    def test_budget_exhausted(self):
        with pytest.raises(MaxIterations):
            solve_newton_system(lambda x: x**3, [1.0], max_iter=2)


class TestFiniteDifferenceJacobian:
    def test_matches_analytic(self):
        def F(x):
            return np.array([x[0] * x[1], math.sin(x[0])])

        x = np.array([0.7, 2.0])
        jac = finite_difference_jacobian(F, x)
        expected = np.array([[2.0, 0.7], [math.cos(0.7), 0.0]])
        assert np.allclose(jac, expected, atol=1e-6)

    def test_steps_backwards_at_the_boundary(self):
        def F(x):
            return np.array([math.sqrt(1.0 - x[0])])

        jac = finite_difference_jacobian(F, np.array([1.0 - 1e-12]), feasible=lambda x: x[0] < 1.0)
        assert np.isfinite(jac).all()
