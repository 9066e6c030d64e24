from .dgp import DGP, SimConfig, TwoPartExponentialDGP, TwoPartGammaDGP
from .sampling import RNG_ALGORITHM, percent_deviation, replication_rng, sample, sample_constraints
from .benchmark import (
    BenchmarkReport,
    BenchmarkRow,
    FailureRecord,
    ReplicationOutcome,
    TracePoint,
    average_traces,
    run_benchmark,
    run_replication,
)
from .studies import EXPONENTIAL_STUDY, GAMMA_STUDY, StudyRow, run_study
from .report import FLOAT_FORMAT, REPORT_COLUMNS, TRACE_COLUMNS, write_report

__all__ = [
    "DGP",
    "EXPONENTIAL_STUDY",
    "FLOAT_FORMAT",
    "GAMMA_STUDY",
    "REPORT_COLUMNS",
    "RNG_ALGORITHM",
    "TRACE_COLUMNS",
    "BenchmarkReport",
    "BenchmarkRow",
    "FailureRecord",
    "ReplicationOutcome",
    "SimConfig",
    "StudyRow",
    "TracePoint",
    "TwoPartExponentialDGP",
    "TwoPartGammaDGP",
    "average_traces",
    "percent_deviation",
    "replication_rng",
    "run_benchmark",
    "run_replication",
    "run_study",
    "sample",
    "sample_constraints",
    "write_report",
]
