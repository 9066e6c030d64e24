from dhenara.semient.types import ObservabilitySettings

from .tracing import force_flush_tracing, setup_tracing, get_tracer, is_tracing_disabled, trace_solver
from .logging import setup_logging, log_with_context, force_flush_logging, reset_logging

from .config import configure_observability

__all__ = [
    "ObservabilitySettings",
    "configure_observability",
    "force_flush_logging",
    "force_flush_tracing",
    "get_tracer",
    "is_tracing_disabled",
    "log_with_context",
    "reset_logging",
    "setup_logging",
    "setup_tracing",
    "trace_solver",
]
