from pydantic import ConfigDict, Field, model_validator

from dhenara.semient.config import get_config
from dhenara.semient.types import GAMMA_EPS, BaseModel, OpenUnitInterval, clamp_gamma

__all__ = ["DEFAULT_GAMMA0", "SolverConfig"]

DEFAULT_GAMMA0 = 0.5


class SolverConfig(BaseModel):
    """Settings of the outer γ iterations.

    Unset fields take their defaults from the active configuration (`get_config()`), so
    `config_override(eps=...)` applies to every solver constructed inside the block.
    """

    model_config = ConfigDict(frozen=True)

    eps: float = Field(
        default_factory=lambda: get_config().eps,
        gt=0,
        description="Stop once |H(p⁽ᵏ⁾) − H(p⁽ᵏ⁻¹⁾)| <= eps",
    )
    max_iter: int = Field(
        default_factory=lambda: get_config().max_iter,
        ge=1,
        description="Maximum number of γ updates",
    )
    gamma0: OpenUnitInterval = Field(
        DEFAULT_GAMMA0,
        description="Starting point mass",
    )
    gamma_minus1: OpenUnitInterval | None = Field(
        None,
        description="Second seed point for the backward difference; defaults to gamma0 + gamma_offset",
    )

    @model_validator(mode="before")
    @classmethod
    def _default_gamma_minus1(cls, data):
        if isinstance(data, dict) and data.get("gamma_minus1") is None:
            gamma0 = float(data.get("gamma0", DEFAULT_GAMMA0))
            offset = get_config().gamma_offset
            candidate = clamp_gamma(gamma0 + offset, GAMMA_EPS)
            if abs(candidate - gamma0) < offset / 2:
                candidate = clamp_gamma(gamma0 - offset, GAMMA_EPS)
            data = {**data, "gamma_minus1": candidate}
        return data

    @model_validator(mode="after")
    def _check_distinct_seeds(self):
        if self.gamma_minus1 == self.gamma0:
            raise ValueError("gamma0 and gamma_minus1 must differ")
        return self

    @classmethod
    def from_zero_proportion(cls, zero_proportion: float | None, **kwargs) -> "SolverConfig":
        """Start from the observed zero proportion (clamped to the interior), or 0.5 without data."""
        if zero_proportion is None:
            return cls(**kwargs)
        return cls(gamma0=clamp_gamma(zero_proportion, GAMMA_EPS), **kwargs)
