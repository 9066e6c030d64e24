import click

from dhenara.cli.commands.utils.benchmark_utils import (
    DGP_OPTIONS,
    RUN_OPTIONS,
    add_options,
    build_dgp,
    check_method_families,
    finish,
    resolve_methods,
    solver_config,
)
from dhenara.cli.commands.utils.print_utils import print_info
from dhenara.semient.config import get_config
from dhenara.semient.simulate import SimConfig, replication_rng, run_benchmark, sample
from dhenara.semient.stations import StationSeries, write_stations


def register(cli):
    cli.add_command(simulate_command)


@click.command("simulate")
@add_options(DGP_OPTIONS)
@add_options(RUN_OPTIONS)
@click.option("--save-sample", is_flag=True, help="Also write the first replication's sample as a station CSV")
@click.pass_context
def simulate_command(
    ctx, dgp, gamma, rate, shape, scale, n, reps, seed, methods, eps, max_iter, threads, out, save_sample
):
    """Simulate one DGP and estimate every replication."""
    if dgp is None:
        raise click.UsageError("--dgp is required")

    process = build_dgp(dgp, gamma, rate, shape, scale)
    methods = resolve_methods(methods)
    check_method_families(methods, {process.kind})
    overrides = {k: v for k, v in {"n": n, "replications": reps, "seed": seed}.items() if v is not None}
    sim_cfg = SimConfig(dgp=process, **overrides)

    if save_sample:
        # Replication 0 draws from the same stream inside the benchmark
        values = sample(process, sim_cfg.n, replication_rng(sim_cfg.seed, 0))
        path = write_stations(
            [StationSeries(station_id="sim", values=values.tolist())],
            f"{out or get_config().out_dir}/simulate_sample.csv",
        )
        print_info("Sample", path)

    report = run_benchmark(sim_cfg, methods, solver_cfg=solver_config(eps, max_iter), threads=threads)
    finish(ctx, report, out, "simulate")
