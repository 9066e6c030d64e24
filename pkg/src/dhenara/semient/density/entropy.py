"""Entropy formulas in nats."""

import math

from dhenara.semient.numerics import digamma, ln_gamma
from dhenara.semient.types import require_open_unit, require_positive

__all__ = ["binary_entropy", "exponential_entropy", "gamma_entropy", "mixture_entropy"]


def binary_entropy(gamma: float) -> float:
    gamma = require_open_unit(gamma)
    return -gamma * math.log(gamma) - (1.0 - gamma) * math.log1p(-gamma)


def mixture_entropy(gamma: float, h_g: float) -> float:
    """Entropy of a point mass γ at zero mixed with a continuous part of entropy h_g.

    H(p) = −γ log γ − (1−γ) log(1−γ) + (1−γ)·h_g

    Raises:
        DomainError: gamma outside (0, 1)
    """
    return binary_entropy(gamma) + (1.0 - gamma) * float(h_g)


def exponential_entropy(rate: float) -> float:
    return 1.0 - math.log(require_positive(rate, "rate"))


def gamma_entropy(shape: float, scale: float) -> float:
    """κ + log θ + ln Γ(κ) + (1−κ)ψ(κ)"""
    shape = require_positive(shape, "shape")
    scale = require_positive(scale, "scale")
    return shape + math.log(scale) + ln_gamma(shape) + (1.0 - shape) * digamma(shape)
