from .enums import ComponentKindEnum, ConstraintFamilyEnum, SolverMethodEnum
from .entropy import binary_entropy, exponential_entropy, gamma_entropy, mixture_entropy
from .components import ContinuousComponent, ExponentialComponent, GammaComponent, LagrangeMultipliers
from .constraints import JENSEN_MARGIN, ConstraintSet
from .density import SemiContinuousDensity, density_at, two_part_moments
from .solution import ConvergenceRecord, ConvergenceTrace, MaxEntSolution

__all__ = [
    "JENSEN_MARGIN",
    "ComponentKindEnum",
    "ConstraintFamilyEnum",
    "ConstraintSet",
    "ContinuousComponent",
    "ConvergenceRecord",
    "ConvergenceTrace",
    "ExponentialComponent",
    "GammaComponent",
    "LagrangeMultipliers",
    "MaxEntSolution",
    "SemiContinuousDensity",
    "SolverMethodEnum",
    "binary_entropy",
    "density_at",
    "exponential_entropy",
    "gamma_entropy",
    "mixture_entropy",
    "two_part_moments",
]
