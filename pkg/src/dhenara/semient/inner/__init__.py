from .solution import InnerSolution
from .solve import gamma_shape_from_gap, h_of_gamma, inner_exponential, inner_gamma, solve_inner

__all__ = [
    "InnerSolution",
    "gamma_shape_from_gap",
    "h_of_gamma",
    "inner_exponential",
    "inner_gamma",
    "solve_inner",
]
