import numpy as np
from pydantic import ConfigDict

from dhenara.semient.types import BaseModel, DomainError, OpenUnitInterval

from .components import ContinuousComponent
from .entropy import mixture_entropy

__all__ = ["SemiContinuousDensity", "density_at", "two_part_moments"]


class SemiContinuousDensity(BaseModel):
    """p(y) = γ·δ(y) + (1−γ)·g(y) on [0, ∞): an atom of mass γ at zero plus a continuous part g."""

    model_config = ConfigDict(frozen=True)

    gamma: OpenUnitInterval
    g: ContinuousComponent

    def cdf(self, y: float | np.ndarray) -> float | np.ndarray:
        """Right-continuous distribution function, F(0) = γ and F(y) = 0 for y < 0."""
        y_arr = np.asarray(y, dtype=float)
        values = np.where(y_arr < 0, 0.0, self.gamma + (1.0 - self.gamma) * self.g.cdf(np.maximum(y_arr, 0.0)))
        return float(values) if values.ndim == 0 else values

    def entropy(self) -> float:
        return mixture_entropy(self.gamma, self.g.entropy)

    @property
    def mean(self) -> float:
        return two_part_moments(self)[0]

    @property
    def variance(self) -> float:
        return two_part_moments(self)[1]


def density_at(d: SemiContinuousDensity, y: float) -> tuple[float, float]:
    """(atom mass, continuous density) at y.

    Raises:
        DomainError: for y < 0
    """
    y = float(y)
    if not y >= 0:
        raise DomainError(f"y must be non-negative, got {y!r}")
    if y == 0.0:
        return d.gamma, 0.0
    return 0.0, (1.0 - d.gamma) * float(d.g.pdf(y))


def two_part_moments(d: SemiContinuousDensity) -> tuple[float, float]:
    """Mean and variance of the two-part density.

    E[Y] = (1−γ)μ and Var[Y] = (1−γ)σ² + γ(1−γ)μ² for a continuous part with mean μ and variance σ².
    """
    weight = 1.0 - d.gamma
    mu = d.g.mean
    mean = weight * mu
    variance = weight * d.g.variance + d.gamma * weight * mu * mu
    return mean, variance
