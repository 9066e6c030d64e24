from typing import Annotated, Literal

from pydantic import ConfigDict, Field

from dhenara.semient.config import get_config
from dhenara.semient.density import (
    ConstraintFamilyEnum,
    ExponentialComponent,
    GammaComponent,
    SemiContinuousDensity,
)
from dhenara.semient.types import BaseModel, OpenUnitInterval, PositiveReal

__all__ = ["DGP", "SimConfig", "TwoPartExponentialDGP", "TwoPartGammaDGP"]


class TwoPartExponentialDGP(BaseModel):
    """Zero with probability γ, otherwise Exponential(rate)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["exponential"] = "exponential"
    gamma: OpenUnitInterval
    rate: PositiveReal

    @property
    def family(self) -> ConstraintFamilyEnum:
        return ConstraintFamilyEnum.mean_only

    @property
    def label(self) -> str:
        return f"exp(gamma={self.gamma:g}, rate={self.rate:g})"

    def density(self) -> SemiContinuousDensity:
        return SemiContinuousDensity(gamma=self.gamma, g=ExponentialComponent(rate=self.rate))


class TwoPartGammaDGP(BaseModel):
    """Zero with probability γ, otherwise Gamma(shape κ, scale θ)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["gamma"] = "gamma"
    gamma: OpenUnitInterval
    shape: PositiveReal
    scale: PositiveReal

    @property
    def family(self) -> ConstraintFamilyEnum:
        return ConstraintFamilyEnum.mean_and_log_mean

    @property
    def label(self) -> str:
        return f"gamma(gamma={self.gamma:g}, shape={self.shape:g}, scale={self.scale:g})"

    def density(self) -> SemiContinuousDensity:
        return SemiContinuousDensity(gamma=self.gamma, g=GammaComponent(shape=self.shape, scale=self.scale))


DGP = Annotated[TwoPartExponentialDGP | TwoPartGammaDGP, Field(discriminator="kind")]


class SimConfig(BaseModel):
    """One Monte-Carlo study cell: a DGP, the sample size and the replication count."""

    model_config = ConfigDict(frozen=True)

    dgp: DGP
    n: int = Field(default_factory=lambda: get_config().n, ge=1)
    replications: int = Field(default_factory=lambda: get_config().replications, ge=1)
    seed: int = Field(default_factory=lambda: get_config().seed, ge=0, lt=2**64)
