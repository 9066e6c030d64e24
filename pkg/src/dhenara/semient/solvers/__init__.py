from .settings import DEFAULT_GAMMA0, SolverConfig
from ._common import stationarity_equation, stationarity_residual
from .aem import aem, aem_update
from .politis import aem_politis, politis_update
from .two_part import two_part_em
from .direct import (
    direct_residuals,
    exp_closed_form,
    exp_closed_form_from_dgp,
    exp_closed_form_gamma,
    gamma_direct,
)
from .registry import METHOD_NAMES, OUTER_METHODS, estimate, method_name, resolve_method

__all__ = [
    "DEFAULT_GAMMA0",
    "METHOD_NAMES",
    "OUTER_METHODS",
    "SolverConfig",
    "aem",
    "aem_politis",
    "aem_update",
    "direct_residuals",
    "estimate",
    "exp_closed_form",
    "exp_closed_form_from_dgp",
    "exp_closed_form_gamma",
    "gamma_direct",
    "method_name",
    "politis_update",
    "resolve_method",
    "stationarity_equation",
    "stationarity_residual",
    "two_part_em",
]
