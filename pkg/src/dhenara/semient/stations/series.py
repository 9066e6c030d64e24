import math

from pydantic import ConfigDict, Field, computed_field, field_validator, model_validator

from dhenara.semient.density import SolverMethodEnum
from dhenara.semient.types import BaseEnum, BaseModel

__all__ = ["STATUS_OK", "StationFormatEnum", "StationResult", "StationSeries"]

STATUS_OK = "ok"


class StationFormatEnum(BaseEnum):
    """CSV layouts: long `station_id,date,value` rows or wide `station_id,v1,v2,...` rows."""

    long = "long"
    wide = "wide"


class StationSeries(BaseModel):
    """Daily non-negative series of one station; dates are carried through but not used."""

    model_config = ConfigDict(frozen=True)

    station_id: str = Field(..., min_length=1)
    values: list[float] = Field(..., min_length=1)
    dates: list[str] | None = None

    @field_validator("values")
    @classmethod
    def _check_values(cls, values: list[float]) -> list[float]:
        for index, value in enumerate(values):
            if not (math.isfinite(value) and value >= 0):
                raise ValueError(f"value {value!r} at position {index} is not a finite non-negative number")
        return values

    @model_validator(mode="after")
    def _check_dates(self):
        if self.dates is not None and len(self.dates) != len(self.values):
            raise ValueError(f"{len(self.dates)} dates for {len(self.values)} values")
        return self

    @computed_field
    @property
    def n_total(self) -> int:
        return len(self.values)

    @computed_field
    @property
    def n_zero(self) -> int:
        """Exact zeros only; trace amounts count as positive."""
        return sum(1 for v in self.values if v == 0.0)

    @property
    def n_positive(self) -> int:
        return self.n_total - self.n_zero

    @property
    def zero_prop(self) -> float:
        return self.n_zero / self.n_total


class StationResult(BaseModel):
    """Per-station entropies of the three estimators.

    `pct_gain` = 100·(H_AEM − max(H_Politis, H_TwoPart))/max(H_Politis, H_TwoPart), set only when every method
    converged. `status` is "ok", or the error kind that made the station incomparable.
    """

    station_id: str
    n: int = Field(..., ge=0)
    zero_prop: float | None = None
    h_aem: float | None = None
    h_politis: float | None = None
    h_twopart: float | None = None
    pct_gain: float | None = None
    converged: dict[SolverMethodEnum, bool] = Field(default_factory=dict)
    errors: dict[SolverMethodEnum, str] = Field(default_factory=dict)
    status: str = STATUS_OK

    @property
    def comparable(self) -> bool:
        return self.pct_gain is not None

    def to_record(self) -> dict[str, str | int | float | None]:
        """Flat record with the published output column names."""
        return {
            "station_id": self.station_id,
            "n": self.n,
            "zero_prop": self.zero_prop,
            "H_aem": self.h_aem,
            "H_politis": self.h_politis,
            "H_twopart": self.h_twopart,
            "pct_gain": self.pct_gain,
            "status": self.status,
        }
