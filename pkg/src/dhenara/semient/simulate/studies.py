"""Preset simulation grids with published reference values."""

import logging
from collections.abc import Iterable

from pydantic import ConfigDict

from dhenara.semient.density import SolverMethodEnum
from dhenara.semient.solvers import OUTER_METHODS, SolverConfig
from dhenara.semient.types import BaseModel, DomainError

from .benchmark import BenchmarkReport, run_benchmark
from .dgp import DGP, SimConfig, TwoPartExponentialDGP, TwoPartGammaDGP

logger = logging.getLogger(__name__)

__all__ = ["EXPONENTIAL_STUDY", "GAMMA_STUDY", "StudyRow", "run_study"]


class StudyRow(BaseModel):
    """A DGP plus published per-method values.

    `reference_h_p` holds mean attained entropies (gamma study); the deviation maps hold mean percentage
    deviations of H(p) and of the variance (exponential study).
    """

    model_config = ConfigDict(frozen=True)

    dgp: DGP
    reference_h_p: dict[SolverMethodEnum, float] = {}
    reference_pct_dev_h_p: dict[SolverMethodEnum, float] = {}
    reference_pct_dev_variance: dict[SolverMethodEnum, float] = {}


def _exp_row(gamma: float, rate: float, h_dev: tuple[float, float, float], var_dev: tuple[float, float, float]):
    return StudyRow(
        dgp=TwoPartExponentialDGP(gamma=gamma, rate=rate),
        reference_pct_dev_h_p=dict(zip(OUTER_METHODS, h_dev)),
        reference_pct_dev_variance=dict(zip(OUTER_METHODS, var_dev)),
    )


def _gamma_row(gamma: float, shape: float, scale: float, h_p: tuple[float, float, float]):
    return StudyRow(
        dgp=TwoPartGammaDGP(gamma=gamma, shape=shape, scale=scale),
        reference_h_p=dict(zip(OUTER_METHODS, h_p)),
    )


# (γ, λ): %dev H(p) and %dev variance for AEM, AEM-Politis, Two-part EM
EXPONENTIAL_STUDY: tuple[StudyRow, ...] = (
    _exp_row(0.1, 0.5, (0.0, -3.2, -6.2), (4.5, -24.6, -31.6)),
    _exp_row(0.1, 1.5, (-0.2, -6.8, -33.8), (-1.1, -33.5, -56.4)),
    _exp_row(0.4, 0.5, (-0.1, -4.5, -0.5), (-0.3, -28.5, 11.6)),
    _exp_row(0.4, 1.5, (-0.1, -7.9, -5.2), (-0.2, -34.9, -29.5)),
    _exp_row(0.8, 0.5, (-0.3, -8.1, -22.8), (0.4, -34.7, 171.4)),
    _exp_row(0.8, 1.5, (0.0, -11.1, -7.4), (1.5, -37.1, 64.1)),
)

# (γ, κ, θ): mean H(p) for AEM, AEM-Politis, Two-part EM
GAMMA_STUDY: tuple[StudyRow, ...] = (
    _gamma_row(0.1, 1.0, 0.5, (0.89, 0.82, 0.65)),
    _gamma_row(0.1, 3.0, 0.5, (1.76, 1.62, 1.36)),
    _gamma_row(0.1, 3.0, 1.0, (2.08, 2.01, 1.98)),
    _gamma_row(0.1, 5.0, 0.5, (1.85, 1.76, 1.63)),
    _gamma_row(0.4, 1.0, 1.5, (1.51, 1.38, 1.50)),
    _gamma_row(0.4, 5.0, 1.0, (2.17, 2.13, 1.96)),
    _gamma_row(0.4, 5.0, 1.5, (2.63, 2.59, 2.20)),
)


def run_study(
    grid: Iterable[StudyRow],
    n: int | None = None,
    replications: int | None = None,
    seed: int | None = None,
    methods: Iterable[SolverMethodEnum | str] = OUTER_METHODS,
    solver_cfg: SolverConfig | None = None,
    threads: int | None = None,
) -> BenchmarkReport:
    """Benchmark every grid row and attach its published values.

    Row i draws replication r from the stream (seed, i, r). Unset sizes come from the configuration.
    """
    methods = list(methods)
    reports = []
    for index, study_row in enumerate(grid):
        overrides = {k: v for k, v in {"n": n, "replications": replications, "seed": seed}.items() if v is not None}
        cfg = SimConfig(dgp=study_row.dgp, **overrides)
        report = run_benchmark(cfg, methods, solver_cfg=solver_cfg, threads=threads, stream_key=(index,))
        report.rows = [
            row.model_copy(
                update={
                    "reference_h_p": study_row.reference_h_p.get(row.method),
                    "reference_pct_dev_h_p": study_row.reference_pct_dev_h_p.get(row.method),
                    "reference_pct_dev_variance": study_row.reference_pct_dev_variance.get(row.method),
                }
            )
            for row in report.rows
        ]
        reports.append(report)

    if not reports:
        raise DomainError("study grid is empty")
    logger.info(f"Study finished: {len(reports)} grid rows")
    return BenchmarkReport.combine(reports)
