# ruff: noqa: S101
import threading

import pytest
from pydantic import ValidationError

from dhenara.semient.config import ConfigurationContext, bind_config, config_override, get_config, load_config
from dhenara.semient.config._config import THREADS_ENV_VAR, _GlobalConfigData


class TestDefaults:
    def test_values(self):
        config = get_config()
        assert config.eps == 1e-8
        assert config.max_iter == 200
        assert config.n == 1000
        assert config.replications == 100
        assert config.max_zero_prop == 0.6
        assert config.min_positive == 30

    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "4")
        assert _GlobalConfigData().threads == 4
        monkeypatch.setenv(THREADS_ENV_VAR, "many")
        assert _GlobalConfigData().threads == 1


class TestInitialize:
    def test_initialize_and_reset(self):
        ConfigurationContext.initialize(eps=1e-10, seed=11)
        assert get_config().eps == 1e-10
        assert get_config().seed == 11
        ConfigurationContext.reset()
        assert get_config().seed == 7

    def test_validation(self):
        with pytest.raises(ValidationError):
            ConfigurationContext.initialize(max_zero_prop=1.5)


class TestOverride:
    def test_restores_previous(self):
        with config_override(replications=5):
            assert get_config().replications == 5
            with config_override(replications=6):
                assert get_config().replications == 6
            assert get_config().replications == 5
        assert get_config().replications == 100

    def test_is_thread_local(self):
        seen = []
        with config_override(n=42):
            worker = threading.Thread(target=lambda: seen.append(get_config().n))
            worker.start()
            worker.join()
            assert get_config().n == 42
        assert seen == [1000]

    def test_bound_job_sees_caller_override_in_worker(self):
        seen = []
        with config_override(n=42):
            job = bind_config(lambda: seen.append(get_config().n))
        worker = threading.Thread(target=job)
        worker.start()
        worker.join()
        assert seen == [42]

    def test_bound_job_restores_thread_config(self):
        with config_override(n=42):
            job = bind_config(lambda: get_config().n)
        with config_override(n=7):
            assert job() == 42
            assert get_config().n == 7
        assert job() == 42
        assert get_config().n == 1000


class TestLoadConfig:
    def test_yaml_with_environment(self, tmp_path):
        path = tmp_path / "semient_config.yaml"
        path.write_text("eps: 1.0e-9\nreplications: 20\nquick:\n  replications: 3\n  n: 100\n", encoding="utf-8")
        assert load_config(path, env="quick") == path
        config = get_config()
        assert config.eps == 1e-9
        assert config.replications == 3
        assert config.n == 100

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.yaml")

    def test_same_file_loads_once(self, tmp_path):
        path = tmp_path / "semient_config.yaml"
        path.write_text("seed: 3\n", encoding="utf-8")
        load_config(path)
        ConfigurationContext.initialize(seed=5)
        assert load_config(path) is None
        assert get_config().seed == 5
