from dhenara.semient.types.base import BaseEnum


class ConstraintFamilyEnum(BaseEnum):
    """Moment-constraint families.

    Attributes:
        mean_only: E[Y] = α₁
        mean_and_log_mean: E[Y] = α₁ and E[h₂(Y)] = α₂ with h₂(0) = 0, h₂(y) = log y
    """

    mean_only = "mean_only"
    mean_and_log_mean = "mean_and_log_mean"


class ComponentKindEnum(BaseEnum):
    exponential = "exponential"
    gamma = "gamma"


class SolverMethodEnum(BaseEnum):
    aem = "aem"
    aem_politis = "aem_politis"
    two_part_em = "two_part_em"
    closed_form = "closed_form"
    direct_system = "direct_system"
