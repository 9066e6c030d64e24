import math
from typing import Annotated

from pydantic import Field

from dhenara.semient.types.platform import DomainError

PositiveReal = Annotated[float, Field(gt=0, allow_inf_nan=False)]
OpenUnitInterval = Annotated[float, Field(gt=0, lt=1)]

# Interior margin for the point mass in every iterative update
GAMMA_EPS = 1e-10


def require_positive(value: float, name: str = "x") -> float:
    """Return `value` as float, raising DomainError unless it is finite and > 0."""
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a finite positive real, got {value!r}")
    return value


def require_open_unit(value: float, name: str = "gamma") -> float:
    value = float(value)
    if not (0.0 < value < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {value!r}")
    return value


def clamp_gamma(value: float, eps: float = GAMMA_EPS) -> float:
    return min(max(float(value), eps), 1.0 - eps)
