# ruff: noqa: S101
import pytest
from pydantic import ValidationError

from dhenara.semient.config import config_override
from dhenara.semient.solvers import SolverConfig


class TestSolverConfig:
    def test_defaults_come_from_config(self):
        cfg = SolverConfig()
        assert cfg.eps == 1e-8
        assert cfg.max_iter == 200
        assert cfg.gamma0 == 0.5
        assert cfg.gamma_minus1 == pytest.approx(0.51)

    def test_override_block(self):
        with config_override(eps=1e-12, max_iter=7, gamma_offset=0.05):
            cfg = SolverConfig()
        assert cfg.eps == 1e-12
        assert cfg.max_iter == 7
        assert cfg.gamma_minus1 == pytest.approx(0.55)

    def test_second_seed_falls_back_below_the_boundary(self):
        cfg = SolverConfig(gamma0=1 - 1e-10)
        assert cfg.gamma_minus1 < cfg.gamma0

    def test_seeds_must_differ(self):
        with pytest.raises(ValidationError):
            SolverConfig(gamma0=0.3, gamma_minus1=0.3)

    @pytest.mark.parametrize("gamma0", [0.0, 1.0])
    def test_gamma0_in_open_interval(self, gamma0):
        with pytest.raises(ValidationError):
            SolverConfig(gamma0=gamma0)

    def test_from_zero_proportion(self):
        assert SolverConfig.from_zero_proportion(0.3).gamma0 == 0.3
        assert SolverConfig.from_zero_proportion(None).gamma0 == 0.5
        assert 0 < SolverConfig.from_zero_proportion(0.0).gamma0 < 1e-9
