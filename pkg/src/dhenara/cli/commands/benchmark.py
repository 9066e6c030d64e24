import logging

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
from dhenara.semient.simulate import EXPONENTIAL_STUDY, GAMMA_STUDY, SimConfig, run_benchmark, run_study

logger = logging.getLogger(__name__)

STUDIES = {
    "exp": EXPONENTIAL_STUDY,
    "gamma": GAMMA_STUDY,
}


def register(cli):
    cli.add_command(benchmark_command)


@click.command("benchmark")
@click.option("--study", type=click.Choice(list(STUDIES)), help="Run a preset DGP grid")
@add_options(DGP_OPTIONS)
@add_options(RUN_OPTIONS)
@click.pass_context
def benchmark_command(ctx, study, dgp, gamma, rate, shape, scale, n, reps, seed, methods, eps, max_iter, threads, out):
    """Compare estimators over Monte-Carlo replications of one DGP or a preset grid.

    Exits 3 when fewer than 90% of the method runs succeed.
    """
    if (study is None) == (dgp is None):
        raise click.UsageError("give exactly one of --study or --dgp")

    methods = resolve_methods(methods)
    cfg = solver_config(eps, max_iter)

    if study is not None:
        if any(v is not None for v in (gamma, rate, shape, scale)):
            raise click.UsageError("DGP parameters cannot be combined with --study")
        grid = STUDIES[study]
        check_method_families(methods, {row.dgp.kind for row in grid})
        report = run_study(grid, n=n, replications=reps, seed=seed, methods=methods, solver_cfg=cfg, threads=threads)
        prefix = f"study_{study}"
    else:
        process = build_dgp(dgp, gamma, rate, shape, scale)
        check_method_families(methods, {process.kind})
        overrides = {k: v for k, v in {"n": n, "replications": reps, "seed": seed}.items() if v is not None}
        report = run_benchmark(SimConfig(dgp=process, **overrides), methods, solver_cfg=cfg, threads=threads)
        prefix = "benchmark"

    logger.info(f"Benchmark finished with success rate {report.success_rate:.1%}")
    finish(ctx, report, out, prefix)
