"""Alternating entropy maximization.

Each outer step fixes γ_k, solves the inner MaxEnt problem for h(γ_k), estimates h′ by the backward
difference through the previous iterate and updates γ by solving

    log((1−x)/x) − h(γ_k) − (x−1)·(h(γ_k) − h(γ_{k−1}))/(γ_k − γ_{k−1}) = 0

on (ε, 1−ε). The left side runs from +∞ to −∞ across the interval, so the bracket always holds a root
for a finite slope. The loop stops once the entropy change is at most eps and the update equation, with
the slope through the final pair of iterates, holds at the new iterate to STATIONARITY_TOL.
"""

import logging

from dhenara.semient.density import ConstraintSet, MaxEntSolution, SolverMethodEnum
from dhenara.semient.inner import InnerSolution, solve_inner
from dhenara.semient.numerics import solve_bracketed
from dhenara.semient.observability import trace_solver
from dhenara.semient.types import GAMMA_EPS, DegenerateStep, MaxIterations

from ._common import STATIONARITY_TOL, build_solution, make_record, stationarity_equation
from .settings import SolverConfig

logger = logging.getLogger(__name__)

__all__ = ["DEGENERATE_STEP", "SLOPE_STEP_FLOOR", "aem", "aem_update", "final_slope"]

DEGENERATE_STEP = 1e-14
# Below this separation the inner solver's rounding dominates a two-point slope
SLOPE_STEP_FLOOR = 1e-7
_UPDATE_TOL = 1e-13


def aem_update(h_k: float, slope: float, gamma_eps: float = GAMMA_EPS) -> float:
    """Solve the γ-update equation for the next iterate."""
    report = solve_bracketed(
        lambda x: stationarity_equation(x, h_k, slope),
        (gamma_eps, 1.0 - gamma_eps),
        tol=_UPDATE_TOL,
    )
    return report.root


def final_slope(
    c: ConstraintSet,
    gamma: float,
    inner: InnerSolution,
    gamma_prev: float,
    inner_prev: InnerSolution,
) -> float:
    """Backward-difference h′ at γ through the previous iterate.

    When the two iterates are closer than SLOPE_STEP_FLOOR the difference is taken over SLOPE_STEP_FLOOR
    instead (forward next to the lower boundary).
    """
    step = gamma - gamma_prev
    if abs(step) >= SLOPE_STEP_FLOOR:
        return (inner.h_g - inner_prev.h_g) / step
    other = gamma - SLOPE_STEP_FLOOR if gamma > 2 * SLOPE_STEP_FLOOR else gamma + SLOPE_STEP_FLOOR
    return (inner.h_g - solve_inner(c, other).h_g) / (gamma - other)


@trace_solver("aem")
def aem(c: ConstraintSet, cfg: SolverConfig | None = None) -> MaxEntSolution:
    """Estimate the MaxEnt semi-continuous density by alternating entropy maximization.

    Args:
        c: Moment constraints
        cfg: Tolerance, budget and the two seed points γ⁽⁰⁾, γ⁽⁻¹⁾

    Returns:
        The solution with its trace (records from k = −1); `diagnostics` holds the final slope and the
        update-equation residual at γ*

    Raises:
        MaxIterations: budget spent; `partial` holds the last iterate and the full trace
        InfeasibleConstraints: an iterate has no feasible continuous part
        DegenerateStep: consecutive iterates coincide before convergence
    """
    cfg = cfg or SolverConfig()

    gamma_prev, gamma_k = cfg.gamma_minus1, cfg.gamma0
    inner_prev = solve_inner(c, gamma_prev)
    inner_k = solve_inner(c, gamma_k)
    records = [make_record(-1, gamma_prev, inner_prev), make_record(0, gamma_k, inner_k)]

    slope = (inner_k.h_g - inner_prev.h_g) / (gamma_k - gamma_prev)
    residual = stationarity_equation(gamma_k, inner_k.h_g, slope)
    converged = False
    k = 0
    while k < cfg.max_iter:
        step = gamma_k - gamma_prev
        if abs(step) < DEGENERATE_STEP:
            raise DegenerateStep(
                f"consecutive iterates coincide at gamma={gamma_k!r} (step {step:.3e}) before convergence"
            )
        gamma_next = aem_update(inner_k.h_g, (inner_k.h_g - inner_prev.h_g) / step)
        inner_next = solve_inner(c, gamma_next)

        k += 1
        records.append(make_record(k, gamma_next, inner_next))
        change = abs(records[-1].h_p_k - records[-2].h_p_k)
        slope = final_slope(c, gamma_next, inner_next, gamma_k, inner_k)
        residual = stationarity_equation(gamma_next, inner_next.h_g, slope)
        logger.debug(
            f"AEM iteration {k}: gamma={gamma_next:.12g}, H(p)={records[-1].h_p_k:.12g}, "
            f"change={change:.3e}, residual={residual:.3e}"
        )

        gamma_prev, inner_prev = gamma_k, inner_k
        gamma_k, inner_k = gamma_next, inner_next
        if change <= cfg.eps and abs(residual) <= STATIONARITY_TOL:
            converged = True
            break

    diagnostics = {"final_slope": slope, "stationarity_residual": residual}
    solution = build_solution(
        gamma_k,
        inner_k,
        SolverMethodEnum.aem,
        records,
        converged=converged,
        iterations=k,
        diagnostics=diagnostics,
    )
    if not converged:
        last_change = solution.trace.last_change
        raise MaxIterations(
            f"AEM did not converge in {cfg.max_iter} iterations "
            f"(last change {last_change:.3e}, residual {residual:.3e})",
            partial=solution,
            iterations=k,
        )

    logger.info(f"AEM converged in {k} iterations: gamma={gamma_k:.10g}, H(p)={solution.h_p:.10g}")
    return solution
