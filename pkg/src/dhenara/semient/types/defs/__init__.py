from ._numeric import (
    GAMMA_EPS,
    OpenUnitInterval,
    PositiveReal,
    clamp_gamma,
    require_open_unit,
    require_positive,
)

__all__ = [
    "GAMMA_EPS",
    "OpenUnitInterval",
    "PositiveReal",
    "clamp_gamma",
    "require_open_unit",
    "require_positive",
]
