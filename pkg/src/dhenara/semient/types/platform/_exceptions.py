from typing import Any

__all__ = [
    "AllZeros",
    "DegenerateStep",
    "DomainError",
    "InfeasibleConstraints",
    "InfeasibleIterate",
    "MaxIterations",
    "NegativeValueError",
    "NoSignChange",
    "NonNegativityViolation",
    "OscillationDetected",
    "RootFindError",
    "SemientError",
    "SingularJacobian",
    "StationDataError",
    "StationIoError",
    "StationParseError",
    "ZeroTruth",
]


class SemientError(Exception):
    """Root of every error raised by the package."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class DomainError(SemientError, ValueError):
    """An argument lies outside the domain of the function."""


# -- Root finding
class RootFindError(SemientError):
    pass


class NoSignChange(RootFindError, ValueError):
    pass


class MaxIterations(RootFindError):
    """Iteration budget exhausted.

    Outer estimators attach the last iterate as `partial` (a MaxEntSolution carrying the full trace).
    """

    def __init__(self, message: str, partial: Any | None = None, iterations: int | None = None):
        super().__init__(message)
        self.partial = partial
        self.iterations = iterations


class SingularJacobian(RootFindError):
    pass


class InfeasibleIterate(RootFindError):
    pass


# -- Estimation
class InfeasibleConstraints(SemientError):
    pass


class DegenerateStep(SemientError):
    pass


class OscillationDetected(SemientError):
    def __init__(self, message: str, partial: Any | None = None):
        super().__init__(message)
        self.partial = partial


# -- Data
class AllZeros(SemientError):
    pass


class NonNegativityViolation(SemientError, ValueError):
    pass


class ZeroTruth(SemientError, ValueError):
    pass


class StationDataError(SemientError):
    pass


class StationIoError(StationDataError):
    pass


class StationParseError(StationDataError):
    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        location = f" (row {row}, column {column!r})" if row is not None else ""
        super().__init__(f"{message}{location}")
        self.row = row
        self.column = column


class NegativeValueError(StationDataError):
    def __init__(self, message: str, row: int | None = None):
        location = f" (row {row})" if row is not None else ""
        super().__init__(f"{message}{location}")
        self.row = row
