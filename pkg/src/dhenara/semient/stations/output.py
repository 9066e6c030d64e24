import json
import logging
from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from .series import StationResult

logger = logging.getLogger(__name__)

__all__ = ["RESULT_COLUMNS", "write_station_results"]

RESULT_COLUMNS = ["station_id", "n", "zero_prop", "H_aem", "H_politis", "H_twopart", "pct_gain", "status"]


def write_station_results(results: Sequence[StationResult], out_dir: str | Path) -> dict[str, Path]:
    """Write `station_results.csv` and its JSON mirror with identical field names."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    records = [r.to_record() for r in results]

    csv_path = out_dir / "station_results.csv"
    pd.DataFrame(records, columns=RESULT_COLUMNS).to_csv(
        csv_path, index=False, float_format="%.17g", lineterminator="\n"
    )

    json_path = out_dir / "station_results.json"
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(records, f, indent=2)
        f.write("\n")

    logger.info(f"Station results written to {out_dir}")
    return {"csv": csv_path, "json": json_path}
