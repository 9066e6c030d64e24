import importlib
import pkgutil
import sys
from pathlib import Path

import click

from dhenara.cli.commands.utils.exit_codes import EXIT_USAGE
from dhenara.semient.config import ConfigurationContext, get_config, load_config
from dhenara.semient.observability import configure_observability, force_flush_logging, force_flush_tracing
from dhenara.semient.types import ObservabilitySettings

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class SemientGroup(click.Group):
    """Click group that reports usage errors with exit status 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


# This will be the main entry point for all CLI commands
@click.group(cls=SemientGroup)
@click.version_option(package_name="dhenara-semient")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    help="YAML configuration file",
)
@click.option("--env", default=None, help="Environment section of the configuration file")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
@click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Write JSON-lines logs here")
@click.option("--trace-file", type=click.Path(dir_okay=False), default=None, help="Write solver spans here")
@click.pass_context
def cli(ctx, config_path, env, log_level, log_file, trace_file):
    """Maximum-entropy estimation for semi-continuous data."""
    if config_path or env:
        load_config(config_path, env=env)

    overrides = {k: v for k, v in {"log_level": log_level, "log_file": log_file}.items() if v}
    if overrides:
        ConfigurationContext.initialize(**overrides)

    config = get_config()
    configure_observability(
        ObservabilitySettings(
            root_log_level=config.log_level,
            logging_exporter_type="file" if config.log_file else "console",
            log_file_path=config.log_file,
            enable_tracing=trace_file is not None,
            tracing_exporter_type="file",
            trace_file_path=trace_file,
        )
    )
    ctx.call_on_close(force_flush_logging)
    ctx.call_on_close(force_flush_tracing)


# Dynamically import all command modules
def load_commands():
    commands_path = Path(__file__).parent / "commands"

    for _, name, _is_pkg in pkgutil.iter_modules([str(commands_path)]):
        if not name.startswith("_"):  # Skip private modules
            module = importlib.import_module(f"dhenara.cli.commands.{name}")
            if hasattr(module, "register"):
                module.register(cli)


# Load all commands
load_commands()


def main():
    """Run the CLI with command line arguments."""
    return cli(sys.argv[1:])


if __name__ == "__main__":
    main()
