# ruff: noqa: S101
from dhenara.cli.main import cli
from dhenara.semient.stations import load_stations


class TestMakeStationsCommand:
    def test_wide_corpus(self, runner, tmp_path):
        path = tmp_path / "corpus.csv"
        args = [
            "make-stations", "--count", "3", "--n-days", "20", "--seed", "1", "--format", "wide", "--out", str(path),
        ]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
        stations = load_stations(path)
        assert [s.station_id for s in stations] == ["S1", "S2", "S3"]
        assert all(s.n_total == 20 for s in stations)

    def test_bad_zero_prop_range(self, runner, tmp_path):
        args = ["make-stations", "--zero-prop-min", "0.5", "--zero-prop-max", "0.2", "--out", str(tmp_path / "s.csv")]
        assert runner.invoke(cli, args).exit_code == 1


class TestGlobalOptions:
    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0

    def test_log_file(self, runner, tmp_path):
        log_file = tmp_path / "run.jsonl"
        args = [
            "--log-level", "info", "--log-file", str(log_file),
            "make-stations", "--count", "1", "--n-days", "5", "--out", str(tmp_path / "s.csv"),
        ]
        assert runner.invoke(cli, args).exit_code == 0
        assert "Wrote 1 stations" in log_file.read_text(encoding="utf-8")

    def test_config_file(self, runner, tmp_path):
        config = tmp_path / "semient.yaml"
        config.write_text(f"out_dir: {tmp_path / 'from_config'}\n", encoding="utf-8")
        args = ["--config", str(config), "make-stations", "--count", "1", "--n-days", "5"]
        assert runner.invoke(cli, args).exit_code == 0
        assert (tmp_path / "from_config" / "stations.csv").exists()
