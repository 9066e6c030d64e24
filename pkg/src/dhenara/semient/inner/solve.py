"""MaxEnt continuous part for a fixed point mass γ.

With h(0) = 0 for every constraint function, fixing γ turns the constraints into conditional moments of
the continuous part: m = α₁/(1−γ) and, for the log-mean family, l = α₂/(1−γ). The maximizer is
exponential with mean m, or gamma with E[Y] = m and E[log Y] = l.
"""

import logging
import math

from dhenara.semient.density import (
    ConstraintFamilyEnum,
    ConstraintSet,
    ExponentialComponent,
    GammaComponent,
    exponential_entropy,
    gamma_entropy,
)
from dhenara.semient.numerics import Bracket, digamma_minus_log, solve_bracketed
from dhenara.semient.types import DomainError, InfeasibleConstraints, require_open_unit

from .solution import InnerSolution

logger = logging.getLogger(__name__)

__all__ = ["gamma_shape_from_gap", "h_of_gamma", "inner_exponential", "inner_gamma", "solve_inner"]

# Shape root is solved in u = log κ
_SHAPE_TOL = 1e-14
_LOG2 = math.log(2.0)
_INITIAL_EXPONENT = 30
_MAX_EXPONENT = 120


def inner_exponential(c: ConstraintSet, gamma: float) -> InnerSolution:
    """Exponential(rate = (1−γ)/α₁) with h_g = 1 + log(α₁/(1−γ))."""
    if c.family != ConstraintFamilyEnum.mean_only:
        raise DomainError(f"inner_exponential needs mean_only constraints, got {c.family}")
    gamma = require_open_unit(gamma)
    m, _ = c.effective(gamma)
    rate = 1.0 / m
    return InnerSolution(g=ExponentialComponent(rate=rate), h_g=exponential_entropy(rate), m=m)


def gamma_shape_from_gap(gap: float) -> float:
    """Shape κ solving ψ(κ) − log κ = gap for gap < 0.

    The left side increases strictly from −∞ to 0⁻; the bracket in log κ starts at [2⁻³⁰, 2³⁰] and is widened
    outward until it holds a sign change.

    Raises:
        InfeasibleConstraints: gap is not negative
    """
    if not gap < 0:
        raise InfeasibleConstraints(f"no gamma shape for gap {gap!r}; E[log Y] must be below log E[Y]")

    def f(u: float) -> float:
        return digamma_minus_log(math.exp(u)) - gap

    lo_exp = hi_exp = _INITIAL_EXPONENT
    while f(-lo_exp * _LOG2) > 0 and lo_exp < _MAX_EXPONENT:
        lo_exp += _INITIAL_EXPONENT
    while f(hi_exp * _LOG2) < 0 and hi_exp < _MAX_EXPONENT:
        hi_exp += _INITIAL_EXPONENT

    # Raises NoSignChange when the gap lies beyond what double precision can resolve
    bracket = Bracket.around(f, -lo_exp * _LOG2, hi_exp * _LOG2)
    report = solve_bracketed(f, bracket, tol=_SHAPE_TOL)
    return math.exp(report.root)


def inner_gamma(c: ConstraintSet, gamma: float) -> InnerSolution:
    """Gamma(κ, θ) with E[Y] = m and E[log Y] = l at the given point mass.

    κ solves ψ(κ) − log κ = l − log m and θ = m/κ.

    Raises:
        InfeasibleConstraints: when l − log m > −1e-12 (Jensen's inequality)
        MaxIterations: from the root solver
    """
    if c.family != ConstraintFamilyEnum.mean_and_log_mean:
        raise DomainError(f"inner_gamma needs mean_and_log_mean constraints, got {c.family}")
    gamma = require_open_unit(gamma)
    c.require_feasible_at(gamma)

    m, log_mean = c.effective(gamma)
    shape = gamma_shape_from_gap(log_mean - math.log(m))
    scale = m / shape
    logger.debug(f"Inner gamma at gamma={gamma:.6g}: shape={shape:.6g}, scale={scale:.6g}")
    return InnerSolution(
        g=GammaComponent(shape=shape, scale=scale),
        h_g=gamma_entropy(shape, scale),
        m=m,
        l=log_mean,
    )


def solve_inner(c: ConstraintSet, gamma: float) -> InnerSolution:
    """Dispatch on the constraint family."""
    if c.family == ConstraintFamilyEnum.mean_only:
        return inner_exponential(c, gamma)
    return inner_gamma(c, gamma)


def h_of_gamma(c: ConstraintSet, gamma: float) -> float:
    """h(γ): entropy of the MaxEnt continuous part at point mass γ."""
    return solve_inner(c, gamma).h_g
