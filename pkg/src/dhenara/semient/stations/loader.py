"""CSV ingestion and serialization of daily station series.

Files are UTF-8, comma-separated, `.` decimal separator. Row numbers in errors are file line numbers
(the header is line 1).
"""

import logging
import math
import re
from pathlib import Path

import pandas as pd

from dhenara.semient.types import NegativeValueError, StationIoError, StationParseError

from .series import StationFormatEnum, StationSeries

logger = logging.getLogger(__name__)

__all__ = ["LONG_COLUMNS", "load_stations", "write_stations"]

LONG_COLUMNS = ["station_id", "date", "value"]
_FIRST_DATE = "2000-01-01"
# Tokenizer message of the C parser; its line numbers count the header
_FIELD_COUNT_ERROR = re.compile(r"Expected (\d+) fields in line (\d+), saw (\d+)")


def _parse_value(raw: str, row: int, column: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise StationParseError(f"non-numeric value {raw!r}", row=row, column=column)
    if not math.isfinite(value):
        raise StationParseError(f"non-finite value {raw!r}", row=row, column=column)
    if value < 0:
        raise NegativeValueError(f"negative value {raw!r} in column {column!r}", row=row)
    return value


def _read_frame(path: Path) -> pd.DataFrame | None:
    if not path.is_file():
        raise StationIoError(f"station file not found: {path}")
    try:
        return pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8", skipinitialspace=True)
    except pd.errors.EmptyDataError:
        return None
    except pd.errors.ParserError as e:
        match = _FIELD_COUNT_ERROR.search(str(e))
        if match is None:
            raise StationParseError(f"malformed CSV: {e}")
        expected, line, saw = (int(g) for g in match.groups())
        raise StationParseError(
            f"malformed CSV: expected {expected} fields, saw {saw}", row=line, column=f"field {expected + 1}"
        )
    except (OSError, UnicodeDecodeError) as e:
        raise StationIoError(f"cannot read station file {path}: {e}")


def _detect_format(frame: pd.DataFrame) -> StationFormatEnum:
    columns = [c.strip() for c in frame.columns]
    return StationFormatEnum.long if columns[: len(LONG_COLUMNS)] == LONG_COLUMNS else StationFormatEnum.wide


def _load_long(frame: pd.DataFrame) -> list[StationSeries]:
    missing = [c for c in LONG_COLUMNS if c not in frame.columns]
    if missing:
        raise StationParseError(
            f"long format needs columns {LONG_COLUMNS}, missing {missing}", row=1, column=missing[0]
        )

    values: dict[str, list[float]] = {}
    dates: dict[str, list[str]] = {}
    for index, (station_id, date, raw) in enumerate(frame[LONG_COLUMNS].itertuples(index=False, name=None)):
        row = index + 2
        station_id = station_id.strip()
        if not station_id:
            raise StationParseError("empty station_id", row=row, column="station_id")
        values.setdefault(station_id, []).append(_parse_value(raw.strip(), row, "value"))
        dates.setdefault(station_id, []).append(date.strip())

    return [StationSeries(station_id=sid, values=values[sid], dates=dates[sid]) for sid in values]


def _load_wide(frame: pd.DataFrame) -> list[StationSeries]:
    if frame.columns[0].strip() != "station_id":
        raise StationParseError("wide format needs station_id as the first column", row=1, column=frame.columns[0])

    stations = []
    seen: set[str] = set()
    value_columns = list(frame.columns[1:])
    for index, record in enumerate(frame.itertuples(index=False, name=None)):
        row = index + 2
        station_id = record[0].strip()
        if not station_id:
            raise StationParseError("empty station_id", row=row, column="station_id")
        if station_id in seen:
            raise StationParseError(f"duplicate station {station_id!r}", row=row, column="station_id")
        seen.add(station_id)

        # Shorter series leave trailing cells empty
        cells = [cell.strip() for cell in record[1:]]
        while cells and cells[-1] == "":
            cells.pop()
        series = [_parse_value(cell, row, column) for cell, column in zip(cells, value_columns)]
        if not series:
            column = value_columns[0] if value_columns else None
            raise StationParseError(f"station {station_id!r} has no values", row=row, column=column)
        stations.append(StationSeries(station_id=station_id, values=series))
    return stations


def load_stations(path: str | Path, format: StationFormatEnum | str | None = None) -> list[StationSeries]:
    """Parse station series from a long or wide CSV; the layout is detected from the header when omitted.

    A file with only a header (or nothing at all) yields an empty list.

    Raises:
        StationIoError: unreadable or missing file
        StationParseError: malformed CSV, missing columns, non-numeric values
        NegativeValueError: negative values
    """
    path = Path(path)
    frame = _read_frame(path)
    if frame is None or frame.empty:
        logger.info(f"No station rows in {path}")
        return []

    fmt = StationFormatEnum(format) if format is not None else _detect_format(frame)
    frame = frame.fillna("")
    frame.columns = [c.strip() for c in frame.columns]
    stations = _load_long(frame) if fmt == StationFormatEnum.long else _load_wide(frame)
    logger.info(f"Loaded {len(stations)} stations from {path} ({fmt} format)")
    return stations


def write_stations(
    stations: list[StationSeries],
    path: str | Path,
    format: StationFormatEnum | str = StationFormatEnum.long,
) -> Path:
    """Write stations as CSV with shortest round-trip float text.

    Long rows use the stored dates, or consecutive days from 2000-01-01 when a series has none.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fmt = StationFormatEnum(format)

    if fmt == StationFormatEnum.long:
        records = []
        for station in stations:
            dates = station.dates or list(pd.date_range(_FIRST_DATE, periods=station.n_total).strftime("%Y-%m-%d"))
            records.extend((station.station_id, d, repr(v)) for d, v in zip(dates, station.values))
        frame = pd.DataFrame(records, columns=LONG_COLUMNS)
    else:
        width = max((s.n_total for s in stations), default=0)
        columns = ["station_id"] + [f"v{i + 1}" for i in range(width)]
        rows = [
            [s.station_id] + [repr(v) for v in s.values] + [""] * (width - s.n_total)
            for s in stations
        ]
        frame = pd.DataFrame(rows, columns=columns)

    frame.to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(stations)} stations to {path} ({fmt} format)")
    return path
