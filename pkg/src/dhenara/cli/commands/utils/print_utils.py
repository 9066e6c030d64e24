import click

COLORS = {
    "green": "\033[92m",
    "blue": "\033[94m",
    "yellow": "\033[93m",
    "red": "\033[91m",
    "purple": "\033[95m",
    "cyan": "\033[96m",
    "bold": "\033[1m",
    "underline": "\033[4m",
    "reset": "\033[0m",
}


def format_value(value):
    """Ten significant digits for floats, plain text otherwise."""
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def print_styled_header(text, color=None):
    """Print a styled header with optional color."""
    styled_text = f"{COLORS.get(color, '')}{COLORS['bold']}{text}{COLORS['reset']}"
    click.echo(styled_text)


def print_info(label, value, indent=2):
    """Print a label-value pair with proper formatting."""
    spaces = " " * indent
    click.echo(f"{spaces}{COLORS['cyan']}{label}:{COLORS['reset']} {format_value(value)}")


def print_separator():
    click.echo("─" * 80)


def print_solution_summary(summary: dict, title: str):
    """Print the flat `MaxEntSolution.summary()` view, skipping empty fields."""
    converged = summary.get("converged", True)
    print_styled_header(title, "green" if converged else "yellow")
    print_separator()
    for key, value in summary.items():
        if value is not None:
            print_info(key, value)


def print_benchmark_summary(report, paths):
    """One line per (DGP, method) row with its averages and the files written."""
    status = "green" if not report.failures else "yellow"
    print_styled_header(f"BENCHMARK: {len(report.dgps)} DGP(s), {report.replications} replications", status)
    print_separator()
    for row in report.rows:
        click.echo(f"  {row.dgp}  {row.method}")
        print_info("successful", f"{row.replications}/{row.replications + row.failures}", indent=4)
        for field in ("mean_gamma", "mean_h_p", "mean_variance", "pct_dev_h_p", "pct_dev_variance", "reference_h_p"):
            value = getattr(row, field)
            if value is not None:
                print_info(field, value, indent=4)
    print_info("Success rate", f"{report.success_rate:.1%}")
    for name, path in paths.items():
        print_info(name, path)


def print_station_summary(summary, paths):
    print_styled_header("STATION PIPELINE COMPLETED", "green")
    print_separator()
    print_info("Stations", summary.stations)
    print_info("Converged", summary.converged)
    print_info(f"pct_gain > {format_value(summary.gain_threshold)}", summary.above_threshold)
    for status, count in sorted(summary.failures.items()):
        print_info(f"status {status}", count)
    for name, path in paths.items():
        print_info(name, path)


def print_error_summary(error_message, title="FAILED"):
    """Print a formatted error summary."""
    print_styled_header(f"❌ {title}", "red")
    print_separator()
    print_info("Error", error_message)
