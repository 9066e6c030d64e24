import math
from typing import TYPE_CHECKING

from pydantic import ConfigDict, Field, model_validator

from dhenara.semient.types import BaseModel, DomainError, InfeasibleConstraints, PositiveReal

from .enums import ComponentKindEnum, ConstraintFamilyEnum

if TYPE_CHECKING:
    from .density import SemiContinuousDensity

__all__ = ["JENSEN_MARGIN", "ConstraintSet"]

# c* = l − log m must stay at or below −JENSEN_MARGIN; the gamma shape diverges as c* → 0⁻
JENSEN_MARGIN = 1e-12


class ConstraintSet(BaseModel):
    """Moment constraints E[Y] = α₁ and, for the log-mean family, E[h₂(Y)] = α₂.

    h₂(0) = 0 and h₂(y) = log y for y > 0, so α₂ may take any sign.
    """

    model_config = ConfigDict(frozen=True)

    family: ConstraintFamilyEnum
    alpha1: PositiveReal = Field(..., description="E[Y], zeros included")
    alpha2: float | None = Field(default=None, allow_inf_nan=False, description="E[h₂(Y)], zeros contribute 0")

    @model_validator(mode="after")
    def _check_alpha2(self):
        if self.family == ConstraintFamilyEnum.mean_and_log_mean and self.alpha2 is None:
            raise ValueError("alpha2 is required for the mean_and_log_mean family")
        if self.family == ConstraintFamilyEnum.mean_only and self.alpha2 is not None:
            raise ValueError("alpha2 must be omitted for the mean_only family")
        return self

    @classmethod
    def mean_only(cls, alpha1: float) -> "ConstraintSet":
        return cls(family=ConstraintFamilyEnum.mean_only, alpha1=alpha1)

    @classmethod
    def mean_and_log_mean(cls, alpha1: float, alpha2: float) -> "ConstraintSet":
        return cls(family=ConstraintFamilyEnum.mean_and_log_mean, alpha1=alpha1, alpha2=alpha2)

    @classmethod
    def from_density(
        cls,
        density: "SemiContinuousDensity",
        family: ConstraintFamilyEnum | None = None,
    ) -> "ConstraintSet":
        """Population constraints of a semi-continuous density.

        The family defaults to mean-only for an exponential part and mean-and-log-mean for a gamma part.
        """
        weight = 1.0 - density.gamma
        if family is None:
            family = (
                ConstraintFamilyEnum.mean_only
                if density.g.kind == ComponentKindEnum.exponential
                else ConstraintFamilyEnum.mean_and_log_mean
            )
        if family == ConstraintFamilyEnum.mean_only:
            return cls.mean_only(weight * density.g.mean)
        return cls.mean_and_log_mean(weight * density.g.mean, weight * density.g.log_mean)

    @property
    def is_log_mean(self) -> bool:
        return self.family == ConstraintFamilyEnum.mean_and_log_mean

    def effective(self, gamma: float) -> tuple[float, float | None]:
        """Conditional moments (m, l) = (α₁/(1−γ), α₂/(1−γ)) of the continuous part, for 0 <= γ < 1."""
        gamma = float(gamma)
        if not 0.0 <= gamma < 1.0:
            raise DomainError(f"gamma must lie in [0, 1), got {gamma!r}")
        weight = 1.0 - gamma
        log_mean = self.alpha2 / weight if self.alpha2 is not None else None
        return self.alpha1 / weight, log_mean

    def jensen_gap(self, gamma: float) -> float | None:
        """c* = l − log m, negative exactly when a gamma part can match the constraints."""
        m, log_mean = self.effective(gamma)
        if log_mean is None:
            return None
        return log_mean - math.log(m)

    def is_feasible_at(self, gamma: float) -> bool:
        gap = self.jensen_gap(gamma)
        return gap is None or gap <= -JENSEN_MARGIN

    def require_feasible_at(self, gamma: float) -> None:
        """Raises InfeasibleConstraints when the induced conditional moments violate Jensen's inequality."""
        gap = self.jensen_gap(gamma)
        if gap is not None and gap > -JENSEN_MARGIN:
            m, log_mean = self.effective(gamma)
            raise InfeasibleConstraints(
                f"constraints infeasible at gamma={gamma:.6g}: "
                f"E[log Y]={log_mean:.6g} must be below log E[Y]={math.log(m):.6g}"
            )
