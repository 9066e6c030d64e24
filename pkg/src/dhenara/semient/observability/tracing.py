import functools
import logging
import time
from collections.abc import Callable
from typing import Any, TypeVar

from opentelemetry import trace
from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter, SimpleSpanProcessor
from opentelemetry.trace import Status, StatusCode

from dhenara.semient.types import ObservabilitySettings

logger = logging.getLogger(__name__)

DEFAULT_SERVICE_NAME = "dhenara-semient"

_tracer_provider: TracerProvider | None = None

F = TypeVar("F", bound=Callable[..., Any])


def setup_tracing(settings: ObservabilitySettings) -> TracerProvider:
    """Configure OpenTelemetry tracing for the application."""
    global _tracer_provider

    resource = Resource.create({"service.name": settings.service_name or DEFAULT_SERVICE_NAME})
    _tracer_provider = TracerProvider(resource=resource)

    if settings.tracing_exporter_type == "otlp" and settings.otlp_endpoint:
        _tracer_provider.add_span_processor(BatchSpanProcessor(OTLPSpanExporter(endpoint=settings.otlp_endpoint)))
    elif settings.tracing_exporter_type == "file" and settings.trace_file_path:
        from dhenara.semient.observability.exporters.file import JsonFileSpanExporter

        _tracer_provider.add_span_processor(SimpleSpanProcessor(JsonFileSpanExporter(settings.trace_file_path)))
    else:
        _tracer_provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter()))

    logger.info(f"Tracing initialized with {settings.tracing_exporter_type} exporter")
    return _tracer_provider


def disable_tracing() -> None:
    global _tracer_provider
    if _tracer_provider is not None:
        _tracer_provider.shutdown()
    _tracer_provider = None


def is_tracing_disabled() -> bool:
    return _tracer_provider is None


def get_tracer(name: str) -> trace.Tracer | None:
    """Tracer from the package's own provider, or None while tracing is disabled."""
    if _tracer_provider is None:
        return None
    return _tracer_provider.get_tracer(name)


def force_flush_tracing():
    """Force flush all pending spans to be exported."""
    if _tracer_provider:
        _tracer_provider.force_flush()


def _record_result(span: trace.Span, result: Any) -> None:
    method = getattr(result, "method", None)
    if method is not None:
        span.set_attribute("semient.method", str(method))
    for name in ("converged", "iterations"):
        value = getattr(result, name, None)
        if value is not None:
            span.set_attribute(f"semient.{name}", value)
    density = getattr(result, "density", None)
    if density is not None:
        span.set_attribute("semient.gamma", float(density.gamma))
    h_p = getattr(result, "h_p", None)
    if h_p is not None:
        span.set_attribute("semient.h_p", float(h_p))


def trace_solver(name: str | None = None) -> Callable[[F], F]:
    """Wrap an estimation call in a span.

    The span records the solver name, elapsed time, and from the returned solution its method,
    convergence flag, iteration count, γ and H(p). Errors are recorded with their `kind`.
    """

    def decorator(func: F) -> F:
        span_name = name or func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            tracer = get_tracer(func.__module__)
            if tracer is None:
                return func(*args, **kwargs)

            start_time = time.perf_counter()
            with tracer.start_as_current_span(f"semient.{span_name}") as span:
                span.set_attribute("semient.solver", span_name)
                try:
                    result = func(*args, **kwargs)
                except Exception as e:
                    span.set_attribute("semient.error_kind", getattr(e, "kind", type(e).__name__))
                    span.set_status(Status(StatusCode.ERROR, str(e)))
                    span.record_exception(e)
                    raise
                finally:
                    span.set_attribute("semient.elapsed_ms", (time.perf_counter() - start_time) * 1000)

                _record_result(span, result)
                span.set_status(Status(StatusCode.OK))
                return result

        return wrapper  # type: ignore[return-value]

    return decorator
