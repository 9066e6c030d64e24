import math

from pydantic import ConfigDict, Field, model_validator

from dhenara.semient.density import ComponentKindEnum, ContinuousComponent
from dhenara.semient.types import BaseModel

__all__ = ["InnerSolution"]

_MOMENT_TOL = 1e-9


class InnerSolution(BaseModel):
    """MaxEnt continuous part for a fixed point mass, with the conditional moments it matches."""

    model_config = ConfigDict(frozen=True)

    g: ContinuousComponent
    h_g: float
    m: float = Field(..., gt=0, description="α₁/(1−γ)")
    l: float | None = Field(default=None, description="α₂/(1−γ), log-mean family only")  # noqa: E741

    @model_validator(mode="after")
    def _check_moments(self):
        if abs(self.g.mean - self.m) > _MOMENT_TOL * max(1.0, self.m):
            raise ValueError(f"continuous part mean {self.g.mean!r} does not match m={self.m!r}")
        if self.l is not None:
            if self.g.kind != ComponentKindEnum.gamma:
                raise ValueError("a log-mean constraint requires a gamma continuous part")
            if abs(self.g.log_mean - self.l) > _MOMENT_TOL * max(1.0, abs(self.l)):
                raise ValueError(f"continuous part log-mean {self.g.log_mean!r} does not match l={self.l!r}")
        return self

    @property
    def effective_constraints(self) -> tuple[float, float | None]:
        return self.m, self.l

    @property
    def jensen_gap(self) -> float | None:
        return None if self.l is None else self.l - math.log(self.m)
