import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor

from pydantic import Field

from dhenara.semient.config import bind_config, get_config
from dhenara.semient.density import ConstraintFamilyEnum, SolverMethodEnum
from dhenara.semient.observability import log_with_context
from dhenara.semient.simulate import sample_constraints
from dhenara.semient.solvers import OUTER_METHODS, SolverConfig, estimate
from dhenara.semient.types import BaseModel, DomainError, SemientError

from .series import STATUS_OK, StationResult, StationSeries

logger = logging.getLogger(__name__)

__all__ = ["StationSummary", "analyze_station", "analyze_stations", "filter_stations", "pct_gain", "summarize"]

_ENTROPY_FIELDS = {
    SolverMethodEnum.aem: "h_aem",
    SolverMethodEnum.aem_politis: "h_politis",
    SolverMethodEnum.two_part_em: "h_twopart",
}


class StationSummary(BaseModel):
    stations: int
    converged: int = Field(..., description="Stations where every method converged")
    above_threshold: int = Field(..., description="Comparable stations with pct_gain above the threshold")
    gain_threshold: float
    failures: dict[str, int] = Field(default_factory=dict, description="Incomparable stations by status")


def filter_stations(
    stations: Iterable[StationSeries],
    max_zero_prop: float | None = None,
    min_positive: int | None = None,
) -> list[StationSeries]:
    """Keep stations with zero proportion strictly below `max_zero_prop` and enough positive values."""
    config = get_config()
    max_zero_prop = config.max_zero_prop if max_zero_prop is None else max_zero_prop
    min_positive = config.min_positive if min_positive is None else min_positive
    if not 0 < max_zero_prop <= 1:
        raise DomainError(f"max_zero_prop must lie in (0, 1], got {max_zero_prop!r}")

    kept = [s for s in stations if s.zero_prop < max_zero_prop and s.n_positive >= min_positive]
    logger.debug(f"Station filter kept {len(kept)} stations (max_zero_prop={max_zero_prop}, min={min_positive})")
    return kept


def pct_gain(h_aem: float, others: Sequence[float]) -> float | None:
    """100·(H_AEM − max(others))/max(others), None when the reference entropy is zero."""
    best = max(others)
    if best == 0:
        return None
    return 100.0 * (h_aem - best) / best


def analyze_station(
    station: StationSeries,
    family: ConstraintFamilyEnum = ConstraintFamilyEnum.mean_and_log_mean,
    cfg: SolverConfig | None = None,
    methods: Sequence[SolverMethodEnum] = OUTER_METHODS,
) -> StationResult:
    """Run every method on one station; failures are recorded in the result, never raised."""
    cfg = cfg or SolverConfig()
    result = StationResult(station_id=station.station_id, n=station.n_total, zero_prop=station.zero_prop)

    try:
        constraints, zero_proportion = sample_constraints(station.values, family)
        # A degenerate positive part (e.g. a constant series) has no gamma fit at the observed atom
        constraints.require_feasible_at(zero_proportion)
    except SemientError as e:
        log_with_context(
            logger,
            logging.WARNING,
            f"Station {station.station_id} skipped",
            {"station_id": station.station_id, "error_kind": e.kind},
            exception=e,
        )
        result.status = e.kind
        result.converged = {m: False for m in methods}
        result.errors = {m: e.kind for m in methods}
        return result

    entropies: dict[SolverMethodEnum, float] = {}
    converged: dict[SolverMethodEnum, bool] = {}
    errors: dict[SolverMethodEnum, str] = {}
    for method in methods:
        method_cfg = SolverConfig.from_zero_proportion(zero_proportion, eps=cfg.eps, max_iter=cfg.max_iter)
        try:
            solution = estimate(method, constraints, method_cfg, zero_proportion)
        except SemientError as e:
            log_with_context(
                logger,
                logging.WARNING,
                f"{method} failed on station {station.station_id}",
                {"station_id": station.station_id, "method": str(method), "error_kind": e.kind},
                exception=e,
            )
            converged[method] = False
            errors[method] = e.kind
            continue
        converged[method] = solution.converged
        entropies[method] = solution.h_p

    updates: dict = {_ENTROPY_FIELDS[m]: h for m, h in entropies.items() if m in _ENTROPY_FIELDS}
    updates.update({"converged": converged, "errors": errors})
    if errors:
        updates["status"] = next(iter(errors.values()))
    elif all(converged.values()) and SolverMethodEnum.aem in entropies and len(entropies) > 1:
        others = [h for m, h in entropies.items() if m != SolverMethodEnum.aem]
        gain = pct_gain(entropies[SolverMethodEnum.aem], others)
        updates["pct_gain"] = gain
        updates["status"] = STATUS_OK if gain is not None else "ZeroReference"
    return result.model_copy(update=updates)


def analyze_stations(
    stations: Sequence[StationSeries],
    family: ConstraintFamilyEnum = ConstraintFamilyEnum.mean_and_log_mean,
    cfg: SolverConfig | None = None,
    methods: Iterable[SolverMethodEnum] = OUTER_METHODS,
    threads: int | None = None,
) -> list[StationResult]:
    """One result per input station, in input order."""
    cfg = cfg or SolverConfig()
    methods = list(methods)
    threads = threads or get_config().threads

    def job(station: StationSeries) -> StationResult:
        return analyze_station(station, family, cfg, methods)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(bind_config(job), stations))
    else:
        results = [job(s) for s in stations]

    logger.info(f"Analyzed {len(results)} stations, {sum(r.comparable for r in results)} comparable")
    return results


def summarize(results: Sequence[StationResult], gain_threshold: float = 5.0) -> StationSummary:
    """Station count, fully converged count and how many comparable stations gain more than the threshold."""
    return StationSummary(
        stations=len(results),
        converged=sum(1 for r in results if r.converged and all(r.converged.values())),
        above_threshold=sum(1 for r in results if r.pct_gain is not None and r.pct_gain > gain_threshold),
        gain_threshold=gain_threshold,
        failures=dict(Counter(r.status for r in results if r.status != STATUS_OK)),
    )
