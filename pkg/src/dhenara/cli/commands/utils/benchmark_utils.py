from pathlib import Path

import click

from dhenara.cli.commands.utils.exit_codes import EXIT_LOW_SUCCESS, MIN_SUCCESS_RATE
from dhenara.cli.commands.utils.print_utils import print_benchmark_summary
from dhenara.semient.config import get_config
from dhenara.semient.simulate import BenchmarkReport, TwoPartExponentialDGP, TwoPartGammaDGP, write_report
from dhenara.semient.solvers import METHOD_NAMES, OUTER_METHODS, SolverConfig, method_name

_unit = click.FloatRange(0, 1, min_open=True, max_open=True)
_positive = click.FloatRange(min=0, min_open=True)


DGP_OPTIONS = [
    click.option("--dgp", type=click.Choice(["exp", "gamma"]), help="Data generating process"),
    click.option("--gamma", type=_unit, help="Zero probability of the DGP"),
    click.option("--rate", type=_positive, help="Exponential rate (exp DGP)"),
    click.option("--shape", type=_positive, help="Gamma shape (gamma DGP)"),
    click.option("--scale", type=_positive, help="Gamma scale (gamma DGP)"),
]

RUN_OPTIONS = [
    click.option("--n", type=click.IntRange(min=1), help="Sample size per replication"),
    click.option("--reps", type=click.IntRange(min=1), help="Number of replications"),
    click.option("--seed", type=click.IntRange(min=0), help="Root seed of every random stream"),
    click.option(
        "--method",
        "methods",
        type=click.Choice(list(METHOD_NAMES)),
        multiple=True,
        help="Method to compare (repeatable); defaults to aem, politis and twopart",
    ),
    click.option("--eps", type=_positive, help="Entropy-change tolerance"),
    click.option("--max-iter", type=click.IntRange(min=1), help="Maximum outer iterations"),
    click.option("--threads", type=click.IntRange(min=1), help="Worker threads (env SEMIENT_THREADS)"),
    click.option("--out", type=click.Path(file_okay=False), help="Output directory (default from config)"),
]


def add_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func

    return decorator


def build_dgp(dgp, gamma, rate, shape, scale):
    """DGP from the command-line flags; mixing the two families' parameters is a usage error."""
    if gamma is None:
        raise click.UsageError("--dgp needs --gamma")
    if dgp == "exp":
        if rate is None:
            raise click.UsageError("--dgp exp needs --rate")
        if shape is not None or scale is not None:
            raise click.UsageError("--shape/--scale apply only to --dgp gamma")
        return TwoPartExponentialDGP(gamma=gamma, rate=rate)

    if shape is None or scale is None:
        raise click.UsageError("--dgp gamma needs --shape and --scale")
    if rate is not None:
        raise click.UsageError("--rate applies only to --dgp exp")
    return TwoPartGammaDGP(gamma=gamma, shape=shape, scale=scale)


def resolve_methods(methods):
    if not methods:
        return list(OUTER_METHODS)
    resolved = [METHOD_NAMES[m] for m in methods]
    return list(dict.fromkeys(resolved))


def solver_config(eps, max_iter) -> SolverConfig:
    overrides = {k: v for k, v in {"eps": eps, "max_iter": max_iter}.items() if v is not None}
    return SolverConfig(**overrides)


def check_method_families(methods, families):
    """closed-form fits only the exponential family and direct only the gamma family."""
    for method in methods:
        name = method_name(method)
        if name == "closed-form" and any(f != "exponential" for f in families):
            raise click.UsageError("--method closed-form needs exponential DGPs")
        if name == "direct" and any(f != "gamma" for f in families):
            raise click.UsageError("--method direct needs gamma DGPs")


def finish(ctx, report: BenchmarkReport, out, prefix: str) -> None:
    """Write the report files, print the summary and exit 3 when too many runs failed."""
    paths = write_report(report, Path(out or get_config().out_dir), prefix=prefix)
    print_benchmark_summary(report, paths)
    if report.success_rate < MIN_SUCCESS_RATE:
        ctx.exit(EXIT_LOW_SUCCESS)
