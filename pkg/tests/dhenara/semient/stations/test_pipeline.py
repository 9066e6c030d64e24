# ruff: noqa: S101
import json
from unittest.mock import patch

import pandas as pd
import pytest

from dhenara.semient.config import config_override
from dhenara.semient.density import ConstraintFamilyEnum, SolverMethodEnum
from dhenara.semient.solvers import estimate
from dhenara.semient.stations import (
    RESULT_COLUMNS,
    StationResult,
    StationSeries,
    analyze_station,
    analyze_stations,
    filter_stations,
    make_synthetic_stations,
    pct_gain,
    summarize,
    write_station_results,
)
from dhenara.semient.types import DegenerateStep, DomainError


@pytest.fixture(scope="module")
def synthetic():
    return make_synthetic_stations(count=3, n_days=800, seed=21)


class TestFilterStations:
    def test_zero_prop_is_strict(self):
        at_limit = StationSeries(station_id="A", values=[0.0] * 6 + [1.0] * 4)
        below = StationSeries(station_id="B", values=[0.0] * 5 + [1.0] * 5)
        kept = filter_stations([at_limit, below], max_zero_prop=0.6, min_positive=1)
        assert [s.station_id for s in kept] == ["B"]

    def test_min_positive(self):
        station = StationSeries(station_id="A", values=[1.0] * 29)
        assert filter_stations([station], max_zero_prop=0.6, min_positive=30) == []

    def test_defaults_from_config(self):
        station = StationSeries(station_id="A", values=[0.0] * 5 + [1.0] * 5)
        assert filter_stations([station]) == []
        with config_override(min_positive=5):
            assert filter_stations([station]) == [station]

    def test_bad_threshold(self):
        with pytest.raises(DomainError):
            filter_stations([], max_zero_prop=0.0)


class TestPctGain:
    def test_against_best_alternative(self):
        assert pct_gain(1.1, [1.0, 0.5]) == pytest.approx(10.0)

    def test_zero_reference(self):
        assert pct_gain(1.0, [0.0, -1.0]) is None


class TestAnalyzeStation:
    def test_synthetic_station_gains(self, synthetic):
        result = analyze_station(synthetic[0])
        assert result.status == "ok"
        assert all(result.converged.values())
        assert result.pct_gain >= -1e-6
        assert result.h_aem >= result.h_twopart - 1e-9

    def test_all_zero_station(self):
        result = analyze_station(StationSeries(station_id="dry", values=[0.0] * 20))
        assert result.status == "AllZeros"
        assert result.pct_gain is None
        assert not any(result.converged.values())

    def test_constant_positive_part(self):
        result = analyze_station(StationSeries(station_id="flat", values=[0.0, 2.0, 2.0, 2.0, 0.0]))
        assert result.status == "InfeasibleConstraints"
        assert result.errors[SolverMethodEnum.aem] == "InfeasibleConstraints"

    def test_exponential_family(self, synthetic):
        result = analyze_station(synthetic[1], family=ConstraintFamilyEnum.mean_only)
        assert result.status == "ok"


class TestAnalyzeStations:
    def test_order_and_threads(self, synthetic):
        stations = [*synthetic, StationSeries(station_id="dry", values=[0.0, 0.0])]
        serial = analyze_stations(stations, threads=1)
        threaded = analyze_stations(stations, threads=3)
        assert [r.station_id for r in serial] == ["S1", "S2", "S3", "dry"]
        assert [r.model_dump() for r in serial] == [r.model_dump() for r in threaded]

    def test_threads_see_caller_config_override(self, synthetic):
        with config_override(gamma_offset=0.3, eps=1e-12):
            serial = analyze_stations(synthetic, threads=1)
            threaded = analyze_stations(synthetic, threads=3)
        assert [r.model_dump() for r in serial] == [r.model_dump() for r in threaded]

    def test_summarize(self, synthetic):
        results = analyze_stations([*synthetic, StationSeries(station_id="dry", values=[0.0])])
        summary = summarize(results, gain_threshold=-100.0)
        assert summary.stations == 4
        assert summary.converged == 3
        assert summary.above_threshold == 3
        assert summary.failures == {"AllZeros": 1}


class TestSyntheticCorpus:
    def test_aem_never_loses(self):
        stations = make_synthetic_stations(count=100, seed=7)
        results = analyze_stations(stations)
        comparable = [r for r in results if r.comparable]
        assert len(comparable) >= 90
        assert min(r.pct_gain for r in comparable) >= -1e-6
        assert sum(r.pct_gain > 1.0 for r in comparable) >= 1


class TestWriteStationResults:
    def test_csv_and_json_agree(self, tmp_path):
        results = [
            StationResult(station_id="A", n=5, zero_prop=0.2, h_aem=1.5, h_politis=1.4, h_twopart=1.3, pct_gain=7.1),
            StationResult(station_id="B", n=3, zero_prop=1.0, status="AllZeros"),
        ]
        paths = write_station_results(results, tmp_path)
        frame = pd.read_csv(paths["csv"])
        assert list(frame.columns) == RESULT_COLUMNS
        records = json.loads(paths["json"].read_text(encoding="utf-8"))
        assert list(records[0]) == RESULT_COLUMNS
        assert records[1]["status"] == "AllZeros"
        assert records[1]["H_aem"] is None


class TestMethodFailures:
    def test_failed_method_marks_station(self, synthetic):
        def flaky(method, *args, **kwargs):
            if method == SolverMethodEnum.aem_politis:
                raise DegenerateStep("stalled")
            return estimate(method, *args, **kwargs)

        with patch("dhenara.semient.stations.pipeline.estimate", side_effect=flaky):
            result = analyze_station(synthetic[0])

        assert result.status == "DegenerateStep"
        assert result.errors == {SolverMethodEnum.aem_politis: "DegenerateStep"}
        assert result.converged[SolverMethodEnum.aem]
        assert result.h_politis is None
        assert result.pct_gain is None
