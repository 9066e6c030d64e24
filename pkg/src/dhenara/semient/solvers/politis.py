"""Fixed-point variant γ ← 1/(1 + exp(h(γ))).

The update drops the multiplier correction of the exact stationarity condition, so its fixed point
sits below the MaxEnt atom and under-states H(p).
"""

import logging

from scipy import special

from dhenara.semient.density import ConstraintSet, ConvergenceRecord, MaxEntSolution, SolverMethodEnum
from dhenara.semient.inner import InnerSolution, solve_inner
from dhenara.semient.observability import trace_solver
from dhenara.semient.types import GAMMA_EPS, MaxIterations, OscillationDetected, clamp_gamma

from ._common import build_solution, make_record
from .settings import SolverConfig

logger = logging.getLogger(__name__)

__all__ = ["aem_politis", "politis_update"]

# Successive differences that alternate in sign without shrinking below this ratio form a 2-cycle
_CYCLE_RATIO = 0.99


def politis_update(h_g: float) -> float:
    return clamp_gamma(float(special.expit(-h_g)), GAMMA_EPS)


def _is_two_cycle(gammas: list[float]) -> bool:
    if len(gammas) < 4:
        return False
    d1 = gammas[-3] - gammas[-4]
    d2 = gammas[-2] - gammas[-3]
    d3 = gammas[-1] - gammas[-2]
    if d1 == 0 or d2 == 0 or d3 == 0:
        return False
    alternating = d1 * d2 < 0 and d2 * d3 < 0
    return alternating and abs(d3) >= _CYCLE_RATIO * abs(d2) and abs(d2) >= _CYCLE_RATIO * abs(d1)


def _iterate(
    c: ConstraintSet,
    cfg: SolverConfig,
    damped: bool,
) -> tuple[float, InnerSolution, list[ConvergenceRecord], int, bool, bool]:
    """Run the fixed-point loop; returns (γ, inner, records, iterations, converged, oscillating)."""
    gamma_k = cfg.gamma0
    inner_k = solve_inner(c, gamma_k)
    records = [make_record(0, gamma_k, inner_k)]
    gammas = [gamma_k]

    k = 0
    while k < cfg.max_iter:
        gamma_next = politis_update(inner_k.h_g)
        if damped:
            gamma_next = 0.5 * (gamma_next + gamma_k)
        inner_next = solve_inner(c, gamma_next)

        k += 1
        records.append(make_record(k, gamma_next, inner_next))
        gammas.append(gamma_next)
        gamma_k, inner_k = gamma_next, inner_next

        if abs(records[-1].h_p_k - records[-2].h_p_k) <= cfg.eps:
            return gamma_k, inner_k, records, k, True, False
        if k >= cfg.max_iter / 2 and _is_two_cycle(gammas):
            logger.debug(f"Politis iteration 2-cycles at k={k}: {gammas[-2]:.10g} <-> {gammas[-1]:.10g}")
            return gamma_k, inner_k, records, k, False, True

    return gamma_k, inner_k, records, k, False, False


@trace_solver("aem_politis")
def aem_politis(c: ConstraintSet, cfg: SolverConfig | None = None) -> MaxEntSolution:
    """Estimate by plain fixed-point iteration on γ = 1/(1 + exp(H(g*))).

    `gamma_minus1` is unused. A detected 2-cycle triggers one retry with half-step averaging
    γ⁽ᵏ⁾ ← (γ⁽ᵏ⁾ + γ⁽ᵏ⁻¹⁾)/2, flagged as `damped_retry` in the diagnostics.

    Raises:
        OscillationDetected: the damped retry still 2-cycles
        MaxIterations: budget spent without convergence
        InfeasibleConstraints: an iterate has no feasible continuous part
    """
    cfg = cfg or SolverConfig()

    damped = False
    gamma_k, inner_k, records, k, converged, oscillating = _iterate(c, cfg, damped=False)
    if oscillating:
        logger.warning("Politis iteration oscillates; retrying once with half-step averaging")
        damped = True
        gamma_k, inner_k, records, k, converged, oscillating = _iterate(c, cfg, damped=True)

    diagnostics = {
        "damped_retry": damped,
        "fixed_point_residual": gamma_k - float(special.expit(-inner_k.h_g)),
    }
    solution = build_solution(
        gamma_k,
        inner_k,
        SolverMethodEnum.aem_politis,
        records,
        converged=converged,
        iterations=k,
        diagnostics=diagnostics,
    )
    if oscillating:
        raise OscillationDetected(
            f"Politis iteration 2-cycles between {records[-2].gamma_k:.10g} and {records[-1].gamma_k:.10g}",
            partial=solution,
        )
    if not converged:
        raise MaxIterations(
            f"Politis iteration did not converge in {cfg.max_iter} iterations",
            partial=solution,
            iterations=k,
        )

    logger.info(f"AEM-Politis converged in {k} iterations: gamma={gamma_k:.10g}, H(p)={solution.h_p:.10g}")
    return solution
