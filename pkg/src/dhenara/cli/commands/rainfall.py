import logging
from pathlib import Path

import click

from dhenara.cli.commands.utils.exit_codes import EXIT_USAGE
from dhenara.cli.commands.utils.print_utils import print_error_summary, print_info, print_station_summary
from dhenara.semient.config import get_config
from dhenara.semient.density import ConstraintFamilyEnum
from dhenara.semient.solvers import SolverConfig
from dhenara.semient.stations import (
    StationFormatEnum,
    analyze_stations,
    filter_stations,
    load_stations,
    summarize,
    write_station_results,
)
from dhenara.semient.types import StationDataError

logger = logging.getLogger(__name__)

FAMILIES = {
    "gamma": ConstraintFamilyEnum.mean_and_log_mean,
    "exp": ConstraintFamilyEnum.mean_only,
}


def register(cli):
    cli.add_command(rainfall_command)


@click.command("rainfall")
@click.option("--data", type=click.Path(dir_okay=False), required=True, help="Station CSV (long or wide)")
@click.option(
    "--format",
    "input_format",
    type=click.Choice(["auto", *StationFormatEnum.values()]),
    default="auto",
    show_default=True,
)
@click.option("--family", type=click.Choice(list(FAMILIES)), default="gamma", show_default=True)
@click.option(
    "--max-zero-prop",
    type=click.FloatRange(0, 1, min_open=True),
    help="Keep stations whose zero proportion is strictly below this value (default from config)",
)
@click.option(
    "--min-positive",
    type=click.IntRange(min=1),
    help="Keep stations with at least this many positives (default from config)",
)
@click.option("--no-filter", is_flag=True, help="Analyze every station, unfiltered")
@click.option("--gain-threshold", type=float, default=5.0, show_default=True, help="Reported pct_gain cut-off")
@click.option("--eps", type=click.FloatRange(min=0, min_open=True), help="Entropy-change tolerance")
@click.option("--max-iter", type=click.IntRange(min=1), help="Maximum outer iterations")
@click.option("--threads", type=click.IntRange(min=1), help="Worker threads (env SEMIENT_THREADS)")
@click.option("--out", type=click.Path(file_okay=False), help="Output directory (default from config)")
@click.pass_context
def rainfall_command(
    ctx,
    data,
    input_format,
    family,
    max_zero_prop,
    min_positive,
    no_filter,
    gain_threshold,
    eps,
    max_iter,
    threads,
    out,
):
    """Compare AEM, AEM-Politis and Two-part EM entropies station by station.

    Unset filter thresholds come from the configuration (zero proportion below 0.6, at least 30 positives);
    --no-filter gives every station a row.
    """
    try:
        stations = load_stations(data, None if input_format == "auto" else input_format)
    except StationDataError as e:
        print_error_summary(f"{e.kind}: {e}", title="CANNOT LOAD STATIONS")
        ctx.exit(EXIT_USAGE)

    if not no_filter:
        stations = filter_stations(stations, max_zero_prop=max_zero_prop, min_positive=min_positive)

    overrides = {k: v for k, v in {"eps": eps, "max_iter": max_iter}.items() if v is not None}
    results = analyze_stations(stations, FAMILIES[family], SolverConfig(**overrides), threads=threads)
    paths = write_station_results(results, Path(out or get_config().out_dir))

    summary = summarize(results, gain_threshold=gain_threshold)
    print_station_summary(summary, paths)
    if not stations:
        print_info("Note", "no station passed the filters")
    logger.info(f"Station pipeline wrote {len(results)} rows")
