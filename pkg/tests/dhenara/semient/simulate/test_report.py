# ruff: noqa: S101
import json

import pandas as pd
import pytest

from dhenara.semient.simulate import (
    REPORT_COLUMNS,
    TRACE_COLUMNS,
    SimConfig,
    TwoPartExponentialDGP,
    run_benchmark,
    write_report,
)


def small_report():
    cfg = SimConfig(dgp=TwoPartExponentialDGP(gamma=0.1, rate=0.5), n=200, replications=3, seed=7)
    return run_benchmark(cfg)


class TestWriteReport:
    def test_files_and_columns(self, tmp_path):
        report = small_report()
        paths = write_report(report, tmp_path)
        assert {p.name for p in paths.values()} == {
            "benchmark_report.csv",
            "benchmark_report.json",
            "benchmark_traces.csv",
        }
        rows = pd.read_csv(paths["report_csv"])
        assert list(rows.columns) == REPORT_COLUMNS
        assert len(rows) == 3
        assert list(pd.read_csv(paths["traces_csv"]).columns) == TRACE_COLUMNS

    def test_csv_keeps_full_precision(self, tmp_path):
        report = small_report()
        paths = write_report(report, tmp_path)
        rows = pd.read_csv(paths["report_csv"])
        assert rows.loc[0, "mean_h_p"] == pytest.approx(report.rows[0].mean_h_p, rel=1e-15)

    def test_json_mirrors_report(self, tmp_path):
        report = small_report()
        paths = write_report(report, tmp_path, prefix="run")
        data = json.loads(paths["report_json"].read_text(encoding="utf-8"))
        assert data["seed"] == 7
        assert data["rows"][0]["method"] == "aem"
        assert paths["report_json"].name == "run_report.json"

    def test_identical_runs_give_identical_bytes(self, tmp_path):
        first = write_report(small_report(), tmp_path / "a")
        second = write_report(small_report(), tmp_path / "b")
        for key in first:
            assert first[key].read_bytes() == second[key].read_bytes()
