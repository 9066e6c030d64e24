from pathlib import Path

import click

from dhenara.cli.commands.utils.print_utils import print_info, print_styled_header
from dhenara.semient.config import get_config
from dhenara.semient.stations import StationFormatEnum, make_synthetic_stations, write_stations


def register(cli):
    cli.add_command(make_stations_command)


@click.command("make-stations")
@click.option("--count", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--n-days", type=click.IntRange(min=1), default=3650, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), help="Root seed (default from config)")
@click.option("--zero-prop-min", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=0.05)
@click.option("--zero-prop-max", type=click.FloatRange(0, 1, min_open=True, max_open=True), default=0.55)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(StationFormatEnum.values()),
    default="long",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), help="Output CSV (default <out_dir>/stations.csv)")
def make_stations_command(count, n_days, seed, zero_prop_min, zero_prop_max, output_format, out):
    """Write a synthetic daily station corpus drawn from two-part gamma processes."""
    if zero_prop_min > zero_prop_max:
        raise click.BadParameter("must not exceed --zero-prop-max", param_hint="--zero-prop-min")

    stations = make_synthetic_stations(
        count=count,
        n_days=n_days,
        seed=get_config().seed if seed is None else seed,
        zero_prop_range=(zero_prop_min, zero_prop_max),
    )
    path = write_stations(stations, Path(out) if out else Path(get_config().out_dir) / "stations.csv", output_format)

    print_styled_header("SYNTHETIC STATIONS WRITTEN", "green")
    print_info("Stations", len(stations))
    print_info("Days per station", n_days)
    print_info("File", path)
