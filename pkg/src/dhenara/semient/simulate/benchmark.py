import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import Field

from dhenara.semient.config import bind_config, get_config
from dhenara.semient.density import ConvergenceTrace, SolverMethodEnum
from dhenara.semient.observability import log_with_context
from dhenara.semient.solvers import OUTER_METHODS, SolverConfig, estimate, exp_closed_form_from_dgp, resolve_method
from dhenara.semient.types import BaseModel, SemientError

from .dgp import DGP, SimConfig, TwoPartExponentialDGP
from .sampling import RNG_ALGORITHM, percent_deviation, replication_rng, sample, sample_constraints

logger = logging.getLogger(__name__)

__all__ = [
    "BenchmarkReport",
    "BenchmarkRow",
    "FailureRecord",
    "ReplicationOutcome",
    "TracePoint",
    "average_traces",
    "run_benchmark",
    "run_replication",
]


class ReplicationOutcome(BaseModel):
    """One method on one replication; `error_kind` is set when the method failed."""

    replication: int
    method: SolverMethodEnum
    h_p: float | None = None
    variance: float | None = None
    gamma: float | None = None
    iterations: int | None = None
    trace: ConvergenceTrace | None = None
    error_kind: str | None = None
    error_message: str | None = None

    @property
    def ok(self) -> bool:
        return self.error_kind is None


class FailureRecord(BaseModel):
    dgp: str
    replication: int
    method: SolverMethodEnum
    kind: str
    message: str


class BenchmarkRow(BaseModel):
    """Replication averages for one (DGP, method) cell.

    Deviations are relative to the MaxEnt solution at the DGP-calibrated constraints and exist only for the
    exponential study.
    """

    dgp: str
    dgp_kind: str
    gamma: float
    rate: float | None = None
    shape: float | None = None
    scale: float | None = None
    method: SolverMethodEnum
    replications: int = Field(..., ge=0, description="Successful replications")
    failures: int = Field(default=0, ge=0)
    mean_gamma: float | None = None
    mean_h_p: float | None = None
    mean_variance: float | None = None
    truth_h_p: float | None = None
    truth_variance: float | None = None
    pct_dev_h_p: float | None = None
    pct_dev_variance: float | None = None
    reference_h_p: float | None = None
    reference_pct_dev_h_p: float | None = None
    reference_pct_dev_variance: float | None = None


class TracePoint(BaseModel):
    dgp: str
    method: SolverMethodEnum
    iteration: int
    mean_gamma: float
    mean_entropy: float


class BenchmarkReport(BaseModel):
    n: int
    replications: int
    seed: int
    rng: str = RNG_ALGORITHM
    methods: list[SolverMethodEnum]
    dgps: list[DGP]
    rows: list[BenchmarkRow] = Field(default_factory=list)
    failures: list[FailureRecord] = Field(default_factory=list)
    traces: list[TracePoint] = Field(default_factory=list)

    @property
    def attempted(self) -> int:
        return len(self.dgps) * self.replications * len(self.methods)

    @property
    def success_rate(self) -> float:
        if self.attempted == 0:
            return 1.0
        return 1.0 - len(self.failures) / self.attempted

    def row(self, method: SolverMethodEnum | str, dgp: str | None = None) -> BenchmarkRow:
        method = resolve_method(method)
        for row in self.rows:
            if row.method == method and (dgp is None or row.dgp == dgp):
                return row
        raise KeyError(f"no row for method {method} and dgp {dgp}")

    @classmethod
    def combine(cls, reports: Sequence["BenchmarkReport"]) -> "BenchmarkReport":
        """Concatenate reports sharing n, replications, seed and methods."""
        first = reports[0]
        return cls(
            n=first.n,
            replications=first.replications,
            seed=first.seed,
            rng=first.rng,
            methods=first.methods,
            dgps=[d for r in reports for d in r.dgps],
            rows=[row for r in reports for row in r.rows],
            failures=[f for r in reports for f in r.failures],
            traces=[t for r in reports for t in r.traces],
        )


def run_replication(
    cfg: SimConfig,
    replication: int,
    methods: Sequence[SolverMethodEnum],
    solver_cfg: SolverConfig,
    stream_key: tuple[int, ...] = (),
) -> list[ReplicationOutcome]:
    """Sample, extract constraints and run every method; failures are captured, never raised."""
    rng = replication_rng(cfg.seed, *stream_key, replication)
    data = sample(cfg.dgp, cfg.n, rng)

    try:
        constraints, zero_proportion = sample_constraints(data, cfg.dgp.family)
    except SemientError as e:
        log_with_context(
            logger,
            logging.WARNING,
            f"Replication {replication} of {cfg.dgp.label} has no usable sample",
            {"replication": replication, "error_kind": e.kind},
            exception=e,
        )
        return [
            ReplicationOutcome(replication=replication, method=m, error_kind=e.kind, error_message=str(e))
            for m in methods
        ]

    outcomes = []
    for method in methods:
        method_cfg = SolverConfig.from_zero_proportion(
            zero_proportion, eps=solver_cfg.eps, max_iter=solver_cfg.max_iter
        )
        try:
            solution = estimate(method, constraints, method_cfg, zero_proportion)
        except SemientError as e:
            log_with_context(
                logger,
                logging.WARNING,
                f"{method} failed on replication {replication} of {cfg.dgp.label}",
                {"replication": replication, "method": str(method), "error_kind": e.kind},
                exception=e,
            )
            outcomes.append(
                ReplicationOutcome(replication=replication, method=method, error_kind=e.kind, error_message=str(e))
            )
            continue

        outcomes.append(
            ReplicationOutcome(
                replication=replication,
                method=method,
                h_p=solution.h_p,
                variance=solution.variance,
                gamma=solution.gamma,
                iterations=solution.iterations,
                trace=solution.trace,
            )
        )
    return outcomes


def average_traces(traces: Iterable[ConvergenceTrace]) -> list[tuple[int, float, float]]:
    """Average (γ, H(p)) by position after padding each trace with its final record to the longest length.

    Returns (iteration, mean γ, mean H(p)) with iteration indices from the longest trace.
    """
    traces = [t for t in traces if len(t) > 0]
    if not traces:
        return []
    longest = max(traces, key=len)
    length = len(longest)

    def padded(values: list[float]) -> list[float]:
        return values + [values[-1]] * (length - len(values))

    gammas = np.array([padded(t.gammas) for t in traces])
    entropies = np.array([padded(t.entropies) for t in traces])
    mean_gamma = gammas.mean(axis=0)
    mean_entropy = entropies.mean(axis=0)
    return [(rec.k, float(mean_gamma[i]), float(mean_entropy[i])) for i, rec in enumerate(longest.records)]


def _mean(values: list[float]) -> float | None:
    return float(np.mean(values)) if values else None


def _summarize(
    cfg: SimConfig,
    method: SolverMethodEnum,
    outcomes: list[ReplicationOutcome],
) -> tuple[BenchmarkRow, list[TracePoint]]:
    dgp = cfg.dgp
    ok = [o for o in outcomes if o.ok]
    row = BenchmarkRow(
        dgp=dgp.label,
        dgp_kind=dgp.kind,
        gamma=dgp.gamma,
        rate=getattr(dgp, "rate", None),
        shape=getattr(dgp, "shape", None),
        scale=getattr(dgp, "scale", None),
        method=method,
        replications=len(ok),
        failures=len(outcomes) - len(ok),
        mean_gamma=_mean([o.gamma for o in ok]),
        mean_h_p=_mean([o.h_p for o in ok]),
        mean_variance=_mean([o.variance for o in ok]),
    )

    if isinstance(dgp, TwoPartExponentialDGP) and ok:
        truth = exp_closed_form_from_dgp(dgp.gamma, dgp.rate)
        row = row.model_copy(
            update={
                "truth_h_p": truth.h_p,
                "truth_variance": truth.variance,
                "pct_dev_h_p": _mean([percent_deviation(o.h_p, truth.h_p) for o in ok]),
                "pct_dev_variance": _mean([percent_deviation(o.variance, truth.variance) for o in ok]),
            }
        )

    traces = [
        TracePoint(dgp=dgp.label, method=method, iteration=k, mean_gamma=g, mean_entropy=h)
        for k, g, h in average_traces(o.trace for o in ok if o.trace is not None)
    ]
    return row, traces


def run_benchmark(
    cfg: SimConfig,
    methods: Iterable[SolverMethodEnum | str] = OUTER_METHODS,
    solver_cfg: SolverConfig | None = None,
    threads: int | None = None,
    stream_key: tuple[int, ...] = (),
) -> BenchmarkReport:
    """Replicate sample → constraints → estimate for each method and average the results.

    Replication r draws from the stream (seed, *stream_key, r), and results are reduced in replication order,
    so serial and threaded runs give identical reports.

    Args:
        cfg: DGP, sample size, replications and seed
        methods: Methods to compare (names or enums)
        solver_cfg: Tolerance and budget; seeds always start from each sample's zero proportion
        threads: Worker threads; defaults to the configured `threads`
        stream_key: Extra stream-key prefix, used by multi-row studies
    """
    methods = [resolve_method(m) for m in methods]
    solver_cfg = solver_cfg or SolverConfig()
    threads = threads or get_config().threads

    logger.info(f"Benchmark {cfg.dgp.label}: n={cfg.n}, replications={cfg.replications}, threads={threads}")

    def job(replication: int) -> list[ReplicationOutcome]:
        return run_replication(cfg, replication, methods, solver_cfg, stream_key)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_replication = list(pool.map(bind_config(job), range(cfg.replications)))
    else:
        per_replication = [job(r) for r in range(cfg.replications)]

    outcomes = sorted((o for batch in per_replication for o in batch), key=lambda o: o.replication)

    rows, traces, failures = [], [], []
    for method in methods:
        method_outcomes = [o for o in outcomes if o.method == method]
        row, method_traces = _summarize(cfg, method, method_outcomes)
        rows.append(row)
        traces.extend(method_traces)
        failures.extend(
            FailureRecord(
                dgp=cfg.dgp.label,
                replication=o.replication,
                method=method,
                kind=o.error_kind,
                message=o.error_message or "",
            )
            for o in method_outcomes
            if not o.ok
        )

    report = BenchmarkReport(
        n=cfg.n,
        replications=cfg.replications,
        seed=cfg.seed,
        methods=methods,
        dgps=[cfg.dgp],
        rows=rows,
        failures=failures,
        traces=traces,
    )
    logger.info(f"Benchmark {cfg.dgp.label} done: {len(failures)} failures, success rate {report.success_rate:.1%}")
    return report
