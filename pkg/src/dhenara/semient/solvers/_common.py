import math

from dhenara.semient.density import (
    ConstraintSet,
    ConvergenceRecord,
    ConvergenceTrace,
    MaxEntSolution,
    SemiContinuousDensity,
    SolverMethodEnum,
    mixture_entropy,
)
from dhenara.semient.inner import InnerSolution, h_of_gamma
from dhenara.semient.types import require_open_unit

__all__ = [
    "STATIONARITY_STEP",
    "STATIONARITY_TOL",
    "build_solution",
    "make_record",
    "stationarity_equation",
    "stationarity_residual",
]

STATIONARITY_STEP = 1e-6
STATIONARITY_TOL = 1e-6


def make_record(k: int, gamma: float, inner: InnerSolution) -> ConvergenceRecord:
    return ConvergenceRecord(k=k, gamma_k=gamma, h_g_k=inner.h_g, h_p_k=mixture_entropy(gamma, inner.h_g))


def build_solution(
    gamma: float,
    inner: InnerSolution,
    method: SolverMethodEnum,
    records: list[ConvergenceRecord],
    converged: bool = True,
    iterations: int = 0,
    diagnostics: dict | None = None,
) -> MaxEntSolution:
    return MaxEntSolution(
        density=SemiContinuousDensity(gamma=gamma, g=inner.g),
        h_g=inner.h_g,
        h_p=mixture_entropy(gamma, inner.h_g),
        multipliers=inner.g.multipliers(),
        trace=ConvergenceTrace(records=records),
        method=method,
        converged=converged,
        iterations=iterations,
        diagnostics=diagnostics or {},
    )


def stationarity_equation(gamma: float, h: float, slope: float) -> float:
    """log((1−γ)/γ) − h − (γ−1)·slope; zero where dH(p)/dγ vanishes."""
    return math.log((1.0 - gamma) / gamma) - h - (gamma - 1.0) * slope


def stationarity_residual(c: ConstraintSet, gamma: float, step: float = STATIONARITY_STEP) -> float:
    """Stationarity residual at γ with h′ from a central difference of width 2·step.

    Independent of any solver's internal slope estimate.
    """
    gamma = require_open_unit(gamma)
    step = min(step, gamma / 2, (1.0 - gamma) / 2)
    slope = (h_of_gamma(c, gamma + step) - h_of_gamma(c, gamma - step)) / (2.0 * step)
    return stationarity_equation(gamma, h_of_gamma(c, gamma), slope)
