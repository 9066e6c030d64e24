import logging
from pathlib import Path

import click
import pandas as pd

from dhenara.cli.commands.utils.exit_codes import EXIT_NUMERICAL
from dhenara.cli.commands.utils.print_utils import print_error_summary, print_info, print_solution_summary
from dhenara.semient.config import get_config
from dhenara.semient.density import ConstraintFamilyEnum, ConstraintSet, MaxEntSolution, SolverMethodEnum
from dhenara.semient.simulate import FLOAT_FORMAT, sample_constraints
from dhenara.semient.solvers import METHOD_NAMES, SolverConfig, estimate, method_name
from dhenara.semient.types import MaxIterations, OscillationDetected, SemientError

logger = logging.getLogger(__name__)

FAMILIES = {
    "exp": ConstraintFamilyEnum.mean_only,
    "gamma": ConstraintFamilyEnum.mean_and_log_mean,
}

TRACE_COLUMNS = ["k", "gamma_k", "h_g_k", "h_p_k"]


def register(cli):
    cli.add_command(estimate_command)


def _read_values(path: str) -> list[float]:
    """Observations from the `value` column, or from the only column of a single-column CSV."""
    try:
        frame = pd.read_csv(path)
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise click.BadParameter(f"cannot read {path}: {e}", param_hint="--data")

    if "value" in frame.columns:
        column = frame["value"]
    elif frame.shape[1] == 1:
        column = frame.iloc[:, 0]
    else:
        raise click.BadParameter(f"{path} needs a 'value' column or exactly one column", param_hint="--data")

    try:
        return pd.to_numeric(column, errors="raise").astype(float).tolist()
    except (ValueError, TypeError) as e:
        raise click.BadParameter(f"non-numeric value in {path}: {e}", param_hint="--data")


def _check_inputs(family, alpha1, alpha2, data, zero_prop, method):
    if data is not None and (alpha1 is not None or alpha2 is not None):
        raise click.UsageError("--data cannot be combined with --alpha1/--alpha2")
    if data is None and alpha1 is None:
        raise click.UsageError("either --alpha1 or --data is required")
    if data is not None and zero_prop is not None:
        raise click.UsageError("--zero-prop is measured from --data and cannot be given with it")
    if data is None:
        if family == ConstraintFamilyEnum.mean_only and alpha2 is not None:
            raise click.UsageError("--alpha2 applies only to --family gamma")
        if family == ConstraintFamilyEnum.mean_and_log_mean and alpha2 is None:
            raise click.UsageError("--family gamma needs --alpha2")
    if method == SolverMethodEnum.closed_form and family != ConstraintFamilyEnum.mean_only:
        raise click.UsageError("--method closed-form needs --family exp")
    if method == SolverMethodEnum.direct_system and family != ConstraintFamilyEnum.mean_and_log_mean:
        raise click.UsageError("--method direct needs --family gamma")
    if method == SolverMethodEnum.two_part_em and data is None and zero_prop is None:
        raise click.UsageError("--method twopart needs --zero-prop or --data")


def write_solution(solution: MaxEntSolution, out_dir: Path, output_format: str) -> dict[str, Path]:
    """JSON holds the whole solution; CSV holds the summary row plus a trace table."""
    out_dir.mkdir(parents=True, exist_ok=True)
    if output_format == "json":
        return {"solution": solution.to_json_file(out_dir / "estimate.json")}

    paths = {"solution": out_dir / "estimate.csv", "trace": out_dir / "estimate_trace.csv"}
    pd.DataFrame([solution.summary()]).to_csv(
        paths["solution"], index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
    )
    trace = [record.model_dump() for record in solution.trace.records]
    pd.DataFrame(trace, columns=TRACE_COLUMNS).to_csv(
        paths["trace"], index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
    )
    return paths


@click.command("estimate")
@click.option("--family", type=click.Choice(list(FAMILIES)), required=True, help="Constraint family")
@click.option("--alpha1", type=click.FloatRange(min=0, min_open=True), help="Sample mean E[Y]")
@click.option("--alpha2", type=float, help="E[log Y] over positives, zeros counted as 0")
@click.option("--data", type=click.Path(exists=True, dir_okay=False), help="CSV of observations")
@click.option(
    "--zero-prop",
    type=click.FloatRange(0, 1, max_open=True),
    help="Observed zero proportion; seeds the iterations and fixes γ for twopart",
)
@click.option("--method", type=click.Choice(list(METHOD_NAMES)), default="aem", show_default=True)
@click.option("--eps", type=click.FloatRange(min=0, min_open=True), help="Entropy-change tolerance")
@click.option("--max-iter", type=click.IntRange(min=1), help="Maximum outer iterations")
@click.option("--gamma0", type=click.FloatRange(0, 1, min_open=True, max_open=True), help="Starting point mass")
@click.option("--format", "output_format", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(file_okay=False), help="Output directory (default from config)")
@click.pass_context
def estimate_command(ctx, family, alpha1, alpha2, data, zero_prop, method, eps, max_iter, gamma0, output_format, out):
    """Estimate a MaxEnt semi-continuous density from moment constraints or data."""
    family = FAMILIES[family]
    method = METHOD_NAMES[method]
    _check_inputs(family, alpha1, alpha2, data, zero_prop, method)

    overrides = {k: v for k, v in {"eps": eps, "max_iter": max_iter}.items() if v is not None}
    try:
        if data is not None:
            constraints, zero_prop = sample_constraints(_read_values(data), family)
        elif family == ConstraintFamilyEnum.mean_only:
            constraints = ConstraintSet.mean_only(alpha1)
        else:
            constraints = ConstraintSet.mean_and_log_mean(alpha1, alpha2)

        if gamma0 is not None:
            cfg = SolverConfig(gamma0=gamma0, **overrides)
        else:
            cfg = SolverConfig.from_zero_proportion(zero_prop, **overrides)
        solution = estimate(method, constraints, cfg, zero_prop)
    except (MaxIterations, OscillationDetected) as e:
        if e.partial is not None:
            print_solution_summary(e.partial.summary(), f"PARTIAL {method_name(method)} SOLUTION")
        print_error_summary(f"{e.kind}: {e}", title="ESTIMATION FAILED")
        ctx.exit(EXIT_NUMERICAL)
    except SemientError as e:
        print_error_summary(f"{e.kind}: {e}", title="ESTIMATION FAILED")
        ctx.exit(EXIT_NUMERICAL)

    print_solution_summary(solution.summary(), f"{method_name(method)} SOLUTION")
    if not solution.converged:
        print_error_summary("solver did not converge", title="ESTIMATION FAILED")
        ctx.exit(EXIT_NUMERICAL)

    paths = write_solution(solution, Path(out or get_config().out_dir), output_format)
    for name, path in paths.items():
        print_info(name, path)
    logger.info(f"Estimate written with {method} ({output_format})")
