# ruff: noqa: S101
import pytest
from pydantic import ValidationError

from dhenara.semient.stations import StationResult, StationSeries


class TestStationSeries:
    def test_counts(self):
        station = StationSeries(station_id="A", values=[0.0, 0.0, 0.001, 3.0])
        assert station.n_total == 4
        assert station.n_zero == 2
        assert station.n_positive == 2
        assert station.zero_prop == 0.5

    @pytest.mark.parametrize("bad", [-1.0, float("nan")])
    def test_rejects_bad_values(self, bad):
        with pytest.raises(ValidationError):
            StationSeries(station_id="A", values=[1.0, bad])

    def test_dates_must_match(self):
        with pytest.raises(ValidationError):
            StationSeries(station_id="A", values=[1.0, 2.0], dates=["2000-01-01"])


class TestStationResult:
    def test_record_columns(self):
        result = StationResult(station_id="A", n=10, zero_prop=0.3, h_aem=1.2, pct_gain=4.0)
        record = result.to_record()
        assert record["H_aem"] == 1.2
        assert record["status"] == "ok"
        assert result.comparable
