from .series import STATUS_OK, StationFormatEnum, StationResult, StationSeries
from .loader import LONG_COLUMNS, load_stations, write_stations
from .pipeline import StationSummary, analyze_station, analyze_stations, filter_stations, pct_gain, summarize
from .synthetic import make_synthetic_stations
from .output import RESULT_COLUMNS, write_station_results

__all__ = [
    "LONG_COLUMNS",
    "RESULT_COLUMNS",
    "STATUS_OK",
    "StationFormatEnum",
    "StationResult",
    "StationSeries",
    "StationSummary",
    "analyze_station",
    "analyze_stations",
    "filter_stations",
    "load_stations",
    "make_synthetic_stations",
    "pct_gain",
    "summarize",
    "write_station_results",
    "write_stations",
]
