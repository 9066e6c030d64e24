from .specfun import digamma, digamma_minus_log, ln_gamma, trigamma
from .rootfind import (
    DEFAULT_MAX_ITER,
    DEFAULT_SCALAR_TOL,
    DEFAULT_SYSTEM_TOL,
    Bracket,
    SolveReport,
    finite_difference_jacobian,
    solve_bracketed,
    solve_newton_system,
)

__all__ = [
    "DEFAULT_MAX_ITER",
    "DEFAULT_SCALAR_TOL",
    "DEFAULT_SYSTEM_TOL",
    "Bracket",
    "SolveReport",
    "digamma",
    "digamma_minus_log",
    "finite_difference_jacobian",
    "ln_gamma",
    "solve_bracketed",
    "solve_newton_system",
    "trigamma",
]
