# ruff: noqa: S101
import pytest

from dhenara.semient.config import config_override

from dhenara.semient.density import ConvergenceRecord, ConvergenceTrace, SolverMethodEnum
from dhenara.semient.simulate import (
    BenchmarkReport,
    SimConfig,
    TwoPartExponentialDGP,
    TwoPartGammaDGP,
    average_traces,
    run_benchmark,
    run_replication,
)
from dhenara.semient.solvers import OUTER_METHODS, SolverConfig


def trace(gammas, start=0):
    return ConvergenceTrace(
        records=[ConvergenceRecord(k=start + i, gamma_k=g, h_g_k=1.0, h_p_k=g) for i, g in enumerate(gammas)]
    )


@pytest.fixture
def exp_cfg():
    return SimConfig(dgp=TwoPartExponentialDGP(gamma=0.4, rate=1.5), n=500, replications=4, seed=3)


class TestAverageTraces:
    def test_pads_with_final_record(self):
        averaged = average_traces([trace([0.5, 0.3]), trace([0.5, 0.4, 0.2])])
        assert [k for k, _, _ in averaged] == [0, 1, 2]
        assert averaged[2][1] == pytest.approx((0.3 + 0.2) / 2)

    def test_keeps_seeded_indices(self):
        averaged = average_traces([trace([0.6, 0.5, 0.4], start=-1)])
        assert [k for k, _, _ in averaged] == [-1, 0, 1]

    def test_empty(self):
        assert average_traces([]) == []


class TestRunReplication:
    def test_every_method_reports(self, exp_cfg):
        outcomes = run_replication(exp_cfg, 0, list(OUTER_METHODS), SolverConfig())
        assert [o.method for o in outcomes] == list(OUTER_METHODS)
        assert all(o.ok for o in outcomes)

    def test_all_zero_sample_is_recorded(self):
        cfg = SimConfig(dgp=TwoPartExponentialDGP(gamma=0.999999, rate=1.0), n=3, replications=1, seed=1)
        outcomes = run_replication(cfg, 0, [SolverMethodEnum.aem], SolverConfig())
        assert outcomes[0].error_kind == "AllZeros"
        assert not outcomes[0].ok


class TestRunBenchmark:
    def test_report_shape(self, exp_cfg):
        report = run_benchmark(exp_cfg)
        assert isinstance(report, BenchmarkReport)
        assert [row.method for row in report.rows] == list(OUTER_METHODS)
        assert report.attempted == 12
        assert report.success_rate == 1.0
        row = report.row("aem")
        assert row.replications == 4
        assert row.truth_h_p is not None
        assert abs(row.pct_dev_h_p) < 5.0

    def test_aem_has_highest_entropy(self, exp_cfg):
        report = run_benchmark(exp_cfg)
        assert report.row("aem").mean_h_p > report.row("politis").mean_h_p
        assert report.row("aem").mean_h_p >= report.row("twopart").mean_h_p - 1e-9

    def test_threads_do_not_change_results(self, exp_cfg):
        serial = run_benchmark(exp_cfg, threads=1)
        threaded = run_benchmark(exp_cfg, threads=3)
        assert serial.model_dump() == threaded.model_dump()

    def test_threads_see_caller_config_override(self, exp_cfg):
        default_seed = run_benchmark(exp_cfg, methods=["aem"], threads=1).traces[0]
        with config_override(gamma_offset=0.3):
            serial = run_benchmark(exp_cfg, methods=["aem"], threads=1)
            threaded = run_benchmark(exp_cfg, methods=["aem"], threads=3)
        assert serial.model_dump() == threaded.model_dump()
        # k = -1 holds the second seed, gamma0 + gamma_offset
        assert threaded.traces[0].iteration == -1
        assert threaded.traces[0].mean_gamma == pytest.approx(default_seed.mean_gamma + 0.29, abs=1e-9)

    def test_traces_are_averaged_per_method(self, exp_cfg):
        report = run_benchmark(exp_cfg, methods=["aem"])
        iterations = [t.iteration for t in report.traces]
        assert iterations[0] == -1
        assert iterations == sorted(iterations)

    def test_gamma_dgp_has_no_truth(self):
        cfg = SimConfig(dgp=TwoPartGammaDGP(gamma=0.4, shape=5.0, scale=1.0), n=300, replications=2, seed=5)
        report = run_benchmark(cfg, methods=["aem", "twopart"])
        assert report.row("aem").truth_h_p is None
        assert report.row("aem").mean_h_p is not None

    def test_combine(self, exp_cfg):
        report = run_benchmark(exp_cfg, methods=["twopart"])
        combined = BenchmarkReport.combine([report, report])
        assert len(combined.rows) == 2
        assert combined.attempted == 8

    def test_unknown_row(self, exp_cfg):
        report = run_benchmark(exp_cfg, methods=["twopart"])
        with pytest.raises(KeyError):
            report.row("aem")
