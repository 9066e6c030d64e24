from pydantic import ConfigDict, Field, field_validator, model_validator

from dhenara.semient.types import BaseModel

from .components import LagrangeMultipliers
from .density import SemiContinuousDensity, two_part_moments
from .entropy import mixture_entropy
from .enums import ComponentKindEnum, SolverMethodEnum

__all__ = ["ConvergenceRecord", "ConvergenceTrace", "MaxEntSolution"]

_ENTROPY_CONSISTENCY_TOL = 1e-12


class ConvergenceRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    gamma_k: float
    h_g_k: float
    h_p_k: float


class ConvergenceTrace(BaseModel):
    """Per-iteration (k, γ, H(g), H(p)) records.

    Indices increase strictly from 0, or from −1 when the run is seeded with two points.
    """

    model_config = ConfigDict(frozen=True)

    records: list[ConvergenceRecord] = Field(default_factory=list)

    @field_validator("records")
    @classmethod
    def _check_indices(cls, records: list[ConvergenceRecord]) -> list[ConvergenceRecord]:
        if records and records[0].k not in (-1, 0):
            raise ValueError(f"trace must start at k=0 or k=-1, got k={records[0].k}")
        for previous, current in zip(records, records[1:]):
            if current.k <= previous.k:
                raise ValueError(f"trace indices must increase strictly, got {previous.k} then {current.k}")
        return records

    def __len__(self) -> int:
        return len(self.records)

    @property
    def gammas(self) -> list[float]:
        return [r.gamma_k for r in self.records]

    @property
    def entropies(self) -> list[float]:
        return [r.h_p_k for r in self.records]

    @property
    def last(self) -> ConvergenceRecord | None:
        return self.records[-1] if self.records else None

    @property
    def last_change(self) -> float | None:
        """|H(p)| change between the final two records."""
        if len(self.records) < 2:
            return None
        return abs(self.records[-1].h_p_k - self.records[-2].h_p_k)


class MaxEntSolution(BaseModel):
    """An estimated MaxEnt semi-continuous density and how it was obtained."""

    model_config = ConfigDict(frozen=True)

    density: SemiContinuousDensity
    h_g: float = Field(..., description="Entropy of the continuous part (nats)")
    h_p: float = Field(..., description="Total entropy (nats)")
    multipliers: LagrangeMultipliers
    trace: ConvergenceTrace = Field(default_factory=ConvergenceTrace)
    method: SolverMethodEnum
    converged: bool = True
    iterations: int = Field(default=0, ge=0)
    diagnostics: dict[str, float | bool | str | None] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_entropy(self):
        expected = mixture_entropy(self.density.gamma, self.h_g)
        if abs(self.h_p - expected) > _ENTROPY_CONSISTENCY_TOL * max(1.0, abs(expected)):
            raise ValueError(f"h_p={self.h_p!r} is inconsistent with the mixture entropy {expected!r}")
        return self

    @property
    def gamma(self) -> float:
        return self.density.gamma

    @property
    def variance(self) -> float:
        return two_part_moments(self.density)[1]

    def summary(self) -> dict[str, float | int | bool | str | None]:
        """Flat view for printing and tabular output."""
        g = self.density.g
        data: dict[str, float | int | bool | str | None] = {
            "method": str(self.method),
            "gamma": self.gamma,
            "component": g.kind,
        }
        if g.kind == ComponentKindEnum.exponential:
            data["rate"] = g.rate
        else:
            data["shape"] = g.shape
            data["scale"] = g.scale
        data.update(
            {
                "h_g": self.h_g,
                "h_p": self.h_p,
                "lambda0": self.multipliers.lambda0,
                "lambda1": self.multipliers.lambda1,
                "lambda2": self.multipliers.lambda2,
                "iterations": self.iterations,
                "converged": self.converged,
            }
        )
        data.update(self.diagnostics)
        return data
