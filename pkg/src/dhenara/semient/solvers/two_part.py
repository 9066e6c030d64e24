import logging

from dhenara.semient.density import ConstraintSet, MaxEntSolution, SolverMethodEnum
from dhenara.semient.inner import solve_inner
from dhenara.semient.observability import trace_solver
from dhenara.semient.types import require_open_unit

from ._common import build_solution, make_record

logger = logging.getLogger(__name__)

__all__ = ["two_part_em"]


@trace_solver("two_part_em")
def two_part_em(c: ConstraintSet, zero_proportion: float) -> MaxEntSolution:
    """Baseline with the atom fixed to the observed zero proportion; only the continuous part is maximized.

    Raises:
        DomainError: zero_proportion outside (0, 1)
        InfeasibleConstraints: no continuous part matches the constraints at that atom
    """
    gamma = require_open_unit(zero_proportion, "zero_proportion")
    inner = solve_inner(c, gamma)
    logger.debug(f"Two-part EM at gamma={gamma:.10g}: H(g)={inner.h_g:.10g}")
    return build_solution(gamma, inner, SolverMethodEnum.two_part_em, [make_record(0, gamma, inner)])
