import math
from typing import Annotated, Literal

import numpy as np
from pydantic import ConfigDict, Field
from scipy import stats

from dhenara.semient.numerics import digamma, ln_gamma
from dhenara.semient.types import BaseModel, PositiveReal

from .entropy import exponential_entropy, gamma_entropy

__all__ = [
    "ContinuousComponent",
    "ExponentialComponent",
    "GammaComponent",
    "LagrangeMultipliers",
]


class LagrangeMultipliers(BaseModel):
    """Multipliers of the exponential-family form g(y) = exp(−1 − λ₀ − λ₁y − λ₂ log y).

    `lambda2` is None for the mean-only family.
    """

    model_config = ConfigDict(frozen=True)

    lambda0: float
    lambda1: float
    lambda2: float | None = None


class ExponentialComponent(BaseModel):
    """Exponential density with the given rate on (0, ∞)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["exponential"] = "exponential"
    rate: PositiveReal

    def _dist(self):
        return stats.expon(scale=1.0 / self.rate)

    def pdf(self, y: float | np.ndarray) -> float | np.ndarray:
        return self._dist().pdf(y)

    def cdf(self, y: float | np.ndarray) -> float | np.ndarray:
        return self._dist().cdf(y)

    @property
    def mean(self) -> float:
        return 1.0 / self.rate

    @property
    def log_mean(self) -> float:
        """E[log Y] = ψ(1) − log rate"""
        return digamma(1.0) - math.log(self.rate)

    @property
    def variance(self) -> float:
        return 1.0 / self.rate**2

    @property
    def entropy(self) -> float:
        return exponential_entropy(self.rate)

    def multipliers(self) -> LagrangeMultipliers:
        return LagrangeMultipliers(lambda0=-1.0 - math.log(self.rate), lambda1=self.rate)


class GammaComponent(BaseModel):
    """Gamma density with shape κ and scale θ on (0, ∞)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["gamma"] = "gamma"
    shape: PositiveReal
    scale: PositiveReal

    def _dist(self):
        return stats.gamma(self.shape, scale=self.scale)

    def pdf(self, y: float | np.ndarray) -> float | np.ndarray:
        return self._dist().pdf(y)

    def cdf(self, y: float | np.ndarray) -> float | np.ndarray:
        return self._dist().cdf(y)

    @property
    def mean(self) -> float:
        return self.shape * self.scale

    @property
    def log_mean(self) -> float:
        """E[log Y] = ψ(κ) + log θ"""
        return digamma(self.shape) + math.log(self.scale)

    @property
    def variance(self) -> float:
        return self.shape * self.scale**2

    @property
    def entropy(self) -> float:
        return gamma_entropy(self.shape, self.scale)

    def multipliers(self) -> LagrangeMultipliers:
        return LagrangeMultipliers(
            lambda0=-1.0 + ln_gamma(self.shape) + self.shape * math.log(self.scale),
            lambda1=1.0 / self.scale,
            lambda2=1.0 - self.shape,
        )


ContinuousComponent = Annotated[ExponentialComponent | GammaComponent, Field(discriminator="kind")]
