"""Scalar bracketed root solving and small damped-Newton systems."""

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import Field, model_validator
from scipy import optimize

from dhenara.semient.types import (
    BaseModel,
    DomainError,
    InfeasibleIterate,
    MaxIterations,
    NoSignChange,
    SingularJacobian,
)

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_MAX_ITER",
    "DEFAULT_SCALAR_TOL",
    "DEFAULT_SYSTEM_TOL",
    "Bracket",
    "SolveReport",
    "finite_difference_jacobian",
    "solve_bracketed",
    "solve_newton_system",
]

DEFAULT_SCALAR_TOL = 1e-12
DEFAULT_SYSTEM_TOL = 1e-10
DEFAULT_MAX_ITER = 100

# Extra Brent iterations allowed on top of the pure-bisection count
_BISECTION_SAFEGUARD = 60
_MAX_HALVINGS = 40
_SINGULAR_CONDITION = 1e14

ScalarFunction = Callable[[float], float]
VectorFunction = Callable[[np.ndarray], np.ndarray]
FeasibilityPredicate = Callable[[np.ndarray], bool]


class Bracket(BaseModel):
    """An interval [lo, hi] over which f changes sign."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_invariants(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        if np.sign(self.f_lo) == np.sign(self.f_hi):
            raise ValueError(f"no sign change over [{self.lo}, {self.hi}]: f_lo={self.f_lo}, f_hi={self.f_hi}")
        return self

    @classmethod
    def around(cls, f: ScalarFunction, lo: float, hi: float) -> "Bracket":
        """Evaluate f at both ends and build the bracket.

        Raises:
            NoSignChange: if f(lo) and f(hi) share a sign
            DomainError: if lo >= hi
        """
        if not lo < hi:
            raise DomainError(f"bracket requires lo < hi, got [{lo}, {hi}]")
        f_lo, f_hi = float(f(lo)), float(f(hi))
        if math.isnan(f_lo) or math.isnan(f_hi) or np.sign(f_lo) == np.sign(f_hi):
            raise NoSignChange(f"f does not change sign over [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}")
        return cls(lo=lo, hi=hi, f_lo=f_lo, f_hi=f_hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


class SolveReport(BaseModel):
    """Outcome of a scalar or vector root solve."""

    solution: tuple[float, ...] = Field(..., description="Root (length 1) or solution vector")
    residual_norm: float = Field(..., ge=0, description="|f(x)| or ‖F(x)‖∞ at the solution")
    iterations: int = Field(..., ge=0)
    function_calls: int = Field(default=0, ge=0)
    converged: bool
    tolerance: float = Field(..., gt=0)

    model_config = {"frozen": True}

    @property
    def root(self) -> float:
        return self.solution[0]


def solve_bracketed(
    f: ScalarFunction,
    bracket: Bracket | tuple[float, float],
    tol: float = DEFAULT_SCALAR_TOL,
    max_iter: int | None = None,
) -> SolveReport:
    """Find a root of f inside a sign-changing bracket.

    Brent's method (inverse quadratic / secant steps with a bisection safeguard). Terminates when
    |f(x)| <= tol or the bracket shrinks below tol·max(1, |x|).

    Args:
        f: Continuous scalar function on [lo, hi]
        bracket: A validated Bracket, or (lo, hi) to be evaluated
        tol: Absolute tolerance (> 0)
        max_iter: Iteration budget; defaults to the bisection count plus a safeguard

    Raises:
        NoSignChange: the bracket invariant fails
        MaxIterations: budget exhausted
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if not isinstance(bracket, Bracket):
        bracket = Bracket.around(f, *bracket)

    for endpoint, value in ((bracket.lo, bracket.f_lo), (bracket.hi, bracket.f_hi)):
        if value == 0.0:
            return SolveReport(
                solution=(endpoint,),
                residual_norm=0.0,
                iterations=0,
                function_calls=2,
                converged=True,
                tolerance=tol,
            )

    if max_iter is None:
        max_iter = math.ceil(math.log2(max(bracket.width / tol, 2.0))) + _BISECTION_SAFEGUARD

    rtol = max(tol, 4 * np.finfo(float).eps)
    root, result = optimize.brentq(
        f,
        bracket.lo,
        bracket.hi,
        xtol=tol,
        rtol=rtol,
        maxiter=max_iter,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise MaxIterations(
            f"bracketed solve did not converge within {max_iter} iterations ({result.flag})",
            iterations=result.iterations,
        )

    residual = abs(float(f(root)))
    return SolveReport(
        solution=(float(root),),
        residual_norm=residual,
        iterations=result.iterations,
        function_calls=result.function_calls + 1,
        converged=True,
        tolerance=tol,
    )


def finite_difference_jacobian(
    F: VectorFunction,
    x: np.ndarray,
    fx: np.ndarray | None = None,
    feasible: FeasibilityPredicate | None = None,
) -> np.ndarray:
    """Forward-difference Jacobian; steps backwards where the forward point is infeasible."""
    x = np.asarray(x, dtype=float)
    fx = np.asarray(F(x) if fx is None else fx, dtype=float)
    jac = np.empty((fx.size, x.size))
    base_step = math.sqrt(np.finfo(float).eps)

    for i in range(x.size):
        h = base_step * max(1.0, abs(x[i]))
        shifted = x.copy()
        shifted[i] += h
        if feasible is not None and not feasible(shifted):
            h = -h
            shifted[i] = x[i] + h
        jac[:, i] = (np.asarray(F(shifted), dtype=float) - fx) / h
    return jac


def _evaluate(F: VectorFunction, x: np.ndarray, feasible: FeasibilityPredicate | None) -> np.ndarray | None:
    """F(x), or None when x is infeasible or F is undefined/non-finite there."""
    if feasible is not None and not feasible(x):
        return None
    try:
        fx = np.asarray(F(x), dtype=float)
    except DomainError:
        return None
    if not np.all(np.isfinite(fx)):
        return None
    return fx


def solve_newton_system(
    F: VectorFunction,
    x0: Sequence[float] | np.ndarray,
    J: Callable[[np.ndarray], np.ndarray] | None = None,
    tol: float = DEFAULT_SYSTEM_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    feasible: FeasibilityPredicate | None = None,
) -> SolveReport:
    """Damped Newton iteration for a small square system F(x) = 0.

    A full step is halved until the iterate stays feasible and ‖F‖∞ decreases. If no halving decreases the
    residual, the best feasible trial is taken.

    Args:
        F: Residual function R^n -> R^n (n <= 3 in this package)
        x0: Starting point
        J: Analytic Jacobian; forward differences when omitted
        tol: Convergence tolerance on ‖F(x)‖∞
        max_iter: Newton iteration budget
        feasible: Optional predicate restricting iterates to a feasible region

    Raises:
        SingularJacobian: the Newton system cannot be solved
        MaxIterations: budget exhausted
        InfeasibleIterate: x0 is infeasible, or damping cannot restore feasibility
    """
    x = np.atleast_1d(np.asarray(x0, dtype=float)).copy()
    fx = _evaluate(F, x, feasible)
    if fx is None:
        raise InfeasibleIterate(f"starting point {x.tolist()} is infeasible")
    if fx.size != x.size:
        raise DomainError(f"F maps R^{x.size} to R^{fx.size}; a square system is required")

    norm = float(np.max(np.abs(fx)))
    calls = 1

    for iteration in range(max_iter + 1):
        if norm <= tol:
            return SolveReport(
                solution=tuple(float(v) for v in x),
                residual_norm=norm,
                iterations=iteration,
                function_calls=calls,
                converged=True,
                tolerance=tol,
            )
        if iteration == max_iter:
            break

        jac = np.atleast_2d(J(x) if J is not None else finite_difference_jacobian(F, x, fx, feasible))
        if not np.all(np.isfinite(jac)) or np.linalg.cond(jac) > _SINGULAR_CONDITION:
            raise SingularJacobian(f"Jacobian is singular or ill-conditioned at x={x.tolist()}")
        try:
            step = np.linalg.solve(jac, -fx)
        except np.linalg.LinAlgError as e:
            raise SingularJacobian(f"Newton system could not be solved at x={x.tolist()}: {e}")

        best: tuple[float, np.ndarray, np.ndarray] | None = None
        t = 1.0
        for _ in range(_MAX_HALVINGS):
            trial = x + t * step
            f_trial = _evaluate(F, trial, feasible)
            calls += 1
            if f_trial is not None:
                trial_norm = float(np.max(np.abs(f_trial)))
                if best is None or trial_norm < best[0]:
                    best = (trial_norm, trial, f_trial)
                if trial_norm < norm:
                    break
            t *= 0.5

        if best is None:
            raise InfeasibleIterate(f"damping could not keep the Newton step feasible from x={x.tolist()}")
        if t < 1.0:
            logger.debug(f"Newton step damped to t={t:.3g} at iteration {iteration}")
        norm, x, fx = best

    raise MaxIterations(
        f"Newton system did not converge in {max_iter} iterations (residual {norm:.3e})",
        iterations=max_iter,
    )
