"""Oracle solutions: the exponential closed form and the gamma multiplier system."""

import logging
import math

import numpy as np
from scipy import special

from dhenara.semient.density import (
    ConstraintFamilyEnum,
    ConstraintSet,
    GammaComponent,
    MaxEntSolution,
    SolverMethodEnum,
    gamma_entropy,
)
from dhenara.semient.inner import InnerSolution, inner_exponential
from dhenara.semient.numerics import DEFAULT_SYSTEM_TOL, digamma, ln_gamma, solve_newton_system, trigamma
from dhenara.semient.observability import trace_solver
from dhenara.semient.types import (
    DomainError,
    InfeasibleIterate,
    SemientError,
    require_open_unit,
    require_positive,
)

from ._common import build_solution, make_record, stationarity_residual
from .aem import aem
from .politis import aem_politis
from .settings import SolverConfig

logger = logging.getLogger(__name__)

__all__ = [
    "direct_residuals",
    "exp_closed_form",
    "exp_closed_form_from_dgp",
    "exp_closed_form_gamma",
    "gamma_direct",
]


def exp_closed_form_gamma(alpha1: float) -> float:
    """Feasible root of x² − (2+α₁)x + 1 = 0, written as 2/((2+α₁) + √((2+α₁)² − 4)).

    The roots multiply to one, so the small root is the reciprocal of the large one; this form avoids the
    cancellation in ((2+α₁) − √((2+α₁)² − 4))/2 for large α₁.
    """
    b = 2.0 + require_positive(alpha1, "alpha1")
    return 2.0 / (b + math.sqrt(b * b - 4.0))


def _closed_form_solution(c: ConstraintSet, gamma: float, dgp: dict | None = None) -> MaxEntSolution:
    inner = inner_exponential(c, gamma)
    diagnostics: dict = {"stationarity_residual": stationarity_residual(c, gamma)}
    if dgp:
        diagnostics.update(dgp)
    return build_solution(
        gamma,
        inner,
        SolverMethodEnum.closed_form,
        [make_record(0, gamma, inner)],
        diagnostics=diagnostics,
    )


@trace_solver("exp_closed_form")
def exp_closed_form(alpha1: float) -> MaxEntSolution:
    """MaxEnt solution for the mean-only family: γ* from the quadratic, rate (1−γ*)/α₁."""
    gamma = exp_closed_form_gamma(alpha1)
    return _closed_form_solution(ConstraintSet.mean_only(alpha1), gamma)


def exp_closed_form_from_dgp(gamma: float, rate: float) -> MaxEntSolution:
    """MaxEnt solution for data from a two-part exponential with atom γ and rate θ.

    Solves θx² − (1−γ+2θ)x + θ = 0, the mean-only quadratic at the calibrated α₁ = (1−γ)/θ.
    """
    gamma = require_open_unit(gamma)
    theta = require_positive(rate, "rate")
    b = 1.0 - gamma + 2.0 * theta
    gamma_star = 2.0 * theta / (b + math.sqrt(b * b - 4.0 * theta * theta))
    c = ConstraintSet.mean_only((1.0 - gamma) / theta)
    return _closed_form_solution(c, gamma_star, dgp={"dgp_gamma": gamma, "dgp_rate": theta})


def _unpack(x: np.ndarray) -> tuple[float, float, float]:
    lambda1, lambda2, gamma = (float(v) for v in x)
    return lambda1, 1.0 - lambda2, gamma


def direct_residuals(c: ConstraintSet, x: np.ndarray) -> np.ndarray:
    """Residuals of the multiplier system in x = (λ₁, λ₂, γ), with a = 1 − λ₂:

    F1 = a/λ₁ − α₁/(1−γ)
    F2 = ψ(a) − log λ₁ − α₂/(1−γ)
    F3 = γ − λ₁ᵃ/(λ₁ᵃ + Γ(a)) = γ − 1/(1 + exp(ln Γ(a) − a log λ₁))
    """
    lambda1, a, gamma = _unpack(x)
    weight = 1.0 - gamma
    z = ln_gamma(a) - a * math.log(lambda1)
    return np.array(
        [
            a / lambda1 - c.alpha1 / weight,
            digamma(a) - math.log(lambda1) - c.alpha2 / weight,
            gamma - float(special.expit(-z)),
        ]
    )


def _direct_jacobian(c: ConstraintSet, x: np.ndarray) -> np.ndarray:
    lambda1, a, gamma = _unpack(x)
    weight = 1.0 - gamma
    log_l1 = math.log(lambda1)
    z = ln_gamma(a) - a * log_l1
    q = float(special.expit(-z))
    dq = q * (1.0 - q)  # dF3/dz
    return np.array(
        [
            [-a / lambda1**2, -1.0 / lambda1, -c.alpha1 / weight**2],
            [-1.0 / lambda1, -trigamma(a), -c.alpha2 / weight**2],
            [dq * (-a / lambda1), dq * (-digamma(a) + log_l1), 1.0],
        ]
    )


def _feasible(x: np.ndarray) -> bool:
    lambda1, lambda2, gamma = x
    return bool(lambda1 > 0 and 1.0 - lambda2 > 0 and 0.0 < gamma < 1.0)


def _seed_from(solution: MaxEntSolution) -> tuple[float, float, float]:
    g = solution.density.g
    return 1.0 / g.scale, 1.0 - g.shape, solution.gamma


@trace_solver("gamma_direct")
def gamma_direct(
    c: ConstraintSet,
    seed: tuple[float, float, float] | MaxEntSolution | None = None,
    cfg: SolverConfig | None = None,
    tol: float = DEFAULT_SYSTEM_TOL,
    max_iter: int = 100,
) -> MaxEntSolution:
    """Solve the three stationarity equations for (λ₁, λ₂, γ*) directly by damped Newton.

    The system is stiff, so it is seeded from an outer solution: the given `seed`, else AEM, else
    AEM-Politis. Iterates are kept in λ₁ > 0, 1 − λ₂ > 0, 0 < γ < 1.

    Raises:
        InfeasibleIterate: no feasible seed, or damping cannot keep an iterate feasible
        SingularJacobian: the Newton system is singular
        MaxIterations: Newton budget spent
    """
    if c.family != ConstraintFamilyEnum.mean_and_log_mean:
        raise DomainError(f"gamma_direct needs mean_and_log_mean constraints, got {c.family}")

    if isinstance(seed, MaxEntSolution):
        seed = _seed_from(seed)
    if seed is None:
        for seeding in (aem, aem_politis):
            try:
                seed = _seed_from(seeding(c, cfg))
                break
            except SemientError as e:
                logger.debug(f"{seeding.__name__} could not seed the direct system: {e.kind}: {e}")
        else:
            raise InfeasibleIterate("no feasible starting point for the multiplier system")

    report = solve_newton_system(
        lambda x: direct_residuals(c, x),
        np.asarray(seed, dtype=float),
        J=lambda x: _direct_jacobian(c, x),
        tol=tol,
        max_iter=max_iter,
        feasible=_feasible,
    )
    lambda1, a, gamma = _unpack(np.asarray(report.solution))
    scale = 1.0 / lambda1
    g = GammaComponent(shape=a, scale=scale)
    m, log_mean = c.effective(gamma)
    inner = InnerSolution.model_construct(g=g, h_g=gamma_entropy(a, scale), m=m, l=log_mean)
    residuals = direct_residuals(c, np.asarray(report.solution))

    logger.info(f"Direct system solved in {report.iterations} Newton steps: gamma={gamma:.10g}, shape={a:.10g}")
    return build_solution(
        gamma,
        inner,
        SolverMethodEnum.direct_system,
        [make_record(0, gamma, inner)],
        iterations=report.iterations,
        diagnostics={
            "residual_norm": report.residual_norm,
            "residual_mean": float(residuals[0]),
            "residual_log_mean": float(residuals[1]),
            "residual_atom": float(residuals[2]),
        },
    )
