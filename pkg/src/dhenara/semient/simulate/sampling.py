"""Seeded two-part sampling and constraint statistics."""

from collections.abc import Sequence

import numpy as np

from dhenara.semient.density import ConstraintFamilyEnum, ConstraintSet
from dhenara.semient.types import AllZeros, NonNegativityViolation, ZeroTruth

from .dgp import DGP, TwoPartExponentialDGP

__all__ = ["RNG_ALGORITHM", "percent_deviation", "replication_rng", "sample", "sample_constraints"]

RNG_ALGORITHM = "PCG64 via SeedSequence(seed, spawn_key)"


def replication_rng(seed: int, *key: int) -> np.random.Generator:
    """Independent stream for (seed, key...), e.g. (seed, replication) or (seed, row, replication).

    Streams depend only on their key, so replications may run in any order or in parallel.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=tuple(key))))


def sample(dgp: DGP, n: int, stream: np.random.Generator | int) -> np.ndarray:
    """n draws: 0 with probability γ, otherwise a draw from the continuous component.

    Gamma variates come from numpy's Marsaglia-Tsang rejection sampler, valid for every shape > 0.
    """
    rng = stream if isinstance(stream, np.random.Generator) else replication_rng(int(stream))
    positive = rng.random(n) >= dgp.gamma
    count = int(positive.sum())

    values = np.zeros(n, dtype=float)
    if isinstance(dgp, TwoPartExponentialDGP):
        values[positive] = rng.exponential(scale=1.0 / dgp.rate, size=count)
    else:
        values[positive] = rng.gamma(dgp.shape, scale=dgp.scale, size=count)
    return values


def sample_constraints(
    data: Sequence[float] | np.ndarray,
    family: ConstraintFamilyEnum,
) -> tuple[ConstraintSet, float]:
    """Empirical constraints over the full sample, zeros included in every denominator.

    α₁ is the sample mean; α₂ averages h₂ with h₂(0) = 0 and h₂(y) = log y.

    Returns:
        (constraints, zero proportion)

    Raises:
        NonNegativityViolation: a negative or non-finite value
        AllZeros: no positive value
    """
    values = np.asarray(data, dtype=float).ravel()
    if values.size == 0:
        raise AllZeros("sample is empty")
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        bad = int(np.flatnonzero(~np.isfinite(values) | (values < 0))[0])
        raise NonNegativityViolation(f"sample value at index {bad} is {values[bad]!r}; values must be finite and >= 0")

    positive = values[values > 0]
    if positive.size == 0:
        raise AllZeros(f"all {values.size} values are zero")

    n = values.size
    zero_proportion = (n - positive.size) / n
    alpha1 = float(values.sum() / n)
    if family == ConstraintFamilyEnum.mean_only:
        return ConstraintSet.mean_only(alpha1), zero_proportion
    alpha2 = float(np.log(positive).sum() / n)
    return ConstraintSet.mean_and_log_mean(alpha1, alpha2), zero_proportion


def percent_deviation(estimate: float, truth: float) -> float:
    """100·(estimate − truth)/truth

    Raises:
        ZeroTruth: truth == 0
    """
    if truth == 0:
        raise ZeroTruth("percentage deviation is undefined for a zero reference value")
    return 100.0 * (estimate - truth) / truth
