import json
import logging
from pathlib import Path

import pandas as pd

from .benchmark import BenchmarkReport

logger = logging.getLogger(__name__)

__all__ = ["FLOAT_FORMAT", "REPORT_COLUMNS", "TRACE_COLUMNS", "write_report"]

# 17 significant digits round-trip every double
FLOAT_FORMAT = "%.17g"

REPORT_COLUMNS = [
    "dgp",
    "dgp_kind",
    "gamma",
    "rate",
    "shape",
    "scale",
    "method",
    "replications",
    "failures",
    "mean_gamma",
    "mean_h_p",
    "mean_variance",
    "truth_h_p",
    "truth_variance",
    "pct_dev_h_p",
    "pct_dev_variance",
    "reference_h_p",
    "reference_pct_dev_h_p",
    "reference_pct_dev_variance",
]
TRACE_COLUMNS = ["dgp", "method", "iteration", "mean_gamma", "mean_entropy"]


def write_report(report: BenchmarkReport, out_dir: str | Path, prefix: str = "benchmark") -> dict[str, Path]:
    """Write `<prefix>_report.csv`, `<prefix>_report.json` and `<prefix>_traces.csv`.

    Output depends only on the report, so identical runs give byte-identical files.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "report_csv": out_dir / f"{prefix}_report.csv",
        "report_json": out_dir / f"{prefix}_report.json",
        "traces_csv": out_dir / f"{prefix}_traces.csv",
    }

    rows = pd.DataFrame([row.model_dump(mode="json") for row in report.rows], columns=REPORT_COLUMNS)
    rows.to_csv(paths["report_csv"], index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    traces = pd.DataFrame([t.model_dump(mode="json") for t in report.traces], columns=TRACE_COLUMNS)
    traces.to_csv(paths["traces_csv"], index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    with open(paths["report_json"], "w", encoding="utf-8") as f:
        json.dump(report.model_dump(mode="json"), f, indent=2)
        f.write("\n")

    logger.info(f"Benchmark report written to {out_dir}")
    return paths
