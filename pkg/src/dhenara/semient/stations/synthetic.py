import logging

import pandas as pd

from dhenara.semient.simulate import TwoPartGammaDGP, replication_rng, sample

from .series import StationSeries

logger = logging.getLogger(__name__)

__all__ = ["make_synthetic_stations"]


def make_synthetic_stations(
    count: int = 100,
    n_days: int = 3650,
    seed: int = 7,
    zero_prop_range: tuple[float, float] = (0.05, 0.55),
    shape_range: tuple[float, float] = (0.5, 3.0),
    scale_range: tuple[float, float] = (2.0, 12.0),
    start_date: str = "2000-01-01",
) -> list[StationSeries]:
    """Stations drawn from per-station two-part gamma processes.

    Station i takes its parameters and its series from the stream (seed, i), so each station is reproducible
    on its own.
    """
    dates = list(pd.date_range(start_date, periods=n_days).strftime("%Y-%m-%d"))
    width = len(str(count))
    stations = []
    for i in range(count):
        rng = replication_rng(seed, i)
        dgp = TwoPartGammaDGP(
            gamma=float(rng.uniform(*zero_prop_range)),
            shape=float(rng.uniform(*shape_range)),
            scale=float(rng.uniform(*scale_range)),
        )
        values = sample(dgp, n_days, rng)
        stations.append(StationSeries(station_id=f"S{i + 1:0{width}d}", values=values.tolist(), dates=dates))
        logger.debug(f"Synthetic station {i + 1}: {dgp.label}")
    return stations
