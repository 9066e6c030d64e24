import logging

from dhenara.semient.density import ConstraintFamilyEnum, ConstraintSet, MaxEntSolution, SolverMethodEnum
from dhenara.semient.types import DomainError

from .aem import aem
from .direct import exp_closed_form, gamma_direct
from .politis import aem_politis
from .settings import SolverConfig
from .two_part import two_part_em

logger = logging.getLogger(__name__)

__all__ = ["METHOD_NAMES", "OUTER_METHODS", "estimate", "method_name", "resolve_method"]

# Command-line names
METHOD_NAMES: dict[str, SolverMethodEnum] = {
    "aem": SolverMethodEnum.aem,
    "politis": SolverMethodEnum.aem_politis,
    "twopart": SolverMethodEnum.two_part_em,
    "closed-form": SolverMethodEnum.closed_form,
    "direct": SolverMethodEnum.direct_system,
}

# The three estimators compared in benchmarks and the station pipeline
OUTER_METHODS: tuple[SolverMethodEnum, ...] = (
    SolverMethodEnum.aem,
    SolverMethodEnum.aem_politis,
    SolverMethodEnum.two_part_em,
)


def resolve_method(method: str | SolverMethodEnum) -> SolverMethodEnum:
    if isinstance(method, SolverMethodEnum):
        return method
    if method in METHOD_NAMES:
        return METHOD_NAMES[method]
    try:
        return SolverMethodEnum(method)
    except ValueError:
        raise DomainError(f"unknown method {method!r}; expected one of {sorted(METHOD_NAMES)}")


def method_name(method: SolverMethodEnum) -> str:
    """Command-line name of a method."""
    return next(name for name, value in METHOD_NAMES.items() if value == method)


def estimate(
    method: str | SolverMethodEnum,
    constraints: ConstraintSet,
    cfg: SolverConfig | None = None,
    zero_proportion: float | None = None,
) -> MaxEntSolution:
    """Run one estimation method on a constraint set.

    When `cfg` is omitted the outer iterations start from the zero proportion (0.5 without one).

    Raises:
        DomainError: unknown method, a method/family mismatch, or Two-part EM without a zero proportion
    """
    method = resolve_method(method)
    if cfg is None:
        cfg = SolverConfig.from_zero_proportion(zero_proportion)

    match method:
        case SolverMethodEnum.aem:
            return aem(constraints, cfg)
        case SolverMethodEnum.aem_politis:
            return aem_politis(constraints, cfg)
        case SolverMethodEnum.two_part_em:
            if zero_proportion is None:
                raise DomainError("two_part_em needs the observed zero proportion")
            return two_part_em(constraints, zero_proportion)
        case SolverMethodEnum.closed_form:
            if constraints.family != ConstraintFamilyEnum.mean_only:
                raise DomainError("the closed form exists only for the mean_only family")
            return exp_closed_form(constraints.alpha1)
        case SolverMethodEnum.direct_system:
            return gamma_direct(constraints, cfg=cfg)
