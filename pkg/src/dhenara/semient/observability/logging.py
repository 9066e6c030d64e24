import logging
import sys
from typing import Any

from opentelemetry.exporter.otlp.proto.grpc._log_exporter import OTLPLogExporter
from opentelemetry.sdk._logs import LoggerProvider, LoggingHandler, LogRecordProcessor
from opentelemetry.sdk._logs.export import BatchLogRecordProcessor, ConsoleLogExporter, SimpleLogRecordProcessor
from opentelemetry.sdk.resources import Resource
from opentelemetry.trace import get_current_span

from dhenara.semient.types import ObservabilitySettings

DEFAULT_SERVICE_NAME = "dhenara-semient"

_logger_provider: LoggerProvider | None = None
_logging_initialized = False

# File currently receiving records; a different path on the next setup rebuilds the pipeline
_current_log_file_path: str | None = None


def _log_processor(settings: ObservabilitySettings) -> tuple[LogRecordProcessor, str | None]:
    """Processor for the configured exporter and the file it writes to, if any."""
    if settings.logging_exporter_type == "otlp" and settings.otlp_endpoint:
        return BatchLogRecordProcessor(OTLPLogExporter(endpoint=settings.otlp_endpoint)), None

    if settings.logging_exporter_type == "file" and settings.log_file_path:
        from dhenara.semient.observability.exporters.file import JsonFileLogExporter

        return BatchLogRecordProcessor(JsonFileLogExporter(settings.log_file_path)), settings.log_file_path

    # stdout carries command summaries only
    return SimpleLogRecordProcessor(ConsoleLogExporter(out=sys.stderr)), None


def reset_logging():
    """Shut down the current provider so the next `setup_logging` builds a fresh pipeline."""
    global _logging_initialized, _logger_provider, _current_log_file_path
    if _logger_provider is not None:
        _logger_provider.shutdown()
    _logging_initialized = False
    _logger_provider = None
    _current_log_file_path = None


def setup_logging(settings: ObservabilitySettings) -> None:
    """Route standard-library logging through an OpenTelemetry logger provider.

    A second call is a no-op unless it points the file exporter at a different file.
    """
    global _logger_provider, _logging_initialized, _current_log_file_path

    observability_logger = logging.getLogger(settings.observability_logger_name)
    if _logging_initialized:
        wants_new_file = (
            settings.logging_exporter_type == "file"
            and settings.log_file_path
            and settings.log_file_path != _current_log_file_path
        )
        if not wants_new_file:
            observability_logger.debug("Logging already initialized, skipping setup")
            return
        observability_logger.debug(f"Switching log file from {_current_log_file_path} to {settings.log_file_path}")
        reset_logging()

    resource = Resource(attributes={"service.name": settings.service_name or DEFAULT_SERVICE_NAME})
    _logger_provider = LoggerProvider(resource=resource)
    processor, _current_log_file_path = _log_processor(settings)
    _logger_provider.add_log_record_processor(processor)

    handler = LoggingHandler(level=settings.root_log_level, logger_provider=_logger_provider)
    logging.basicConfig(level=settings.root_log_level, handlers=[handler], force=True)

    # Solver and pipeline loggers live under "dhenara"; per-logger overrides refine them
    logging.getLogger("dhenara").setLevel(settings.root_log_level)
    for logger_name, level in settings.log_config.loggers.items():
        logging.getLogger(logger_name).setLevel(level)

    _logging_initialized = True
    observability_logger.info(
        f"Logging initialized with {settings.logging_exporter_type} exporter at level {settings.root_log_level}"
    )


def log_with_context(
    logger: logging.Logger,
    level: int,
    message: str,
    extra_attributes: dict[str, Any] | None = None,
    exception: Exception | None = None,
) -> None:
    """Log with the active span's ids and, for a failure, its type, `kind` and message.

    The stack trace is attached only at ERROR and above; batch layers log expected estimation failures at
    WARNING so a run with a few failed replications stays readable.
    """
    extra = dict(extra_attributes or {})

    span = get_current_span()
    if span.is_recording():
        span_context = span.get_span_context()
        extra["trace_id"] = format(span_context.trace_id, "032x")
        extra["span_id"] = format(span_context.span_id, "016x")

    exc_info = None
    if exception is not None:
        extra["exception_type"] = type(exception).__name__
        extra["exception_message"] = str(exception)
        extra.setdefault("error_kind", getattr(exception, "kind", type(exception).__name__))
        if level >= logging.ERROR:
            exc_info = exception

    logger.log(level, message, extra=extra, exc_info=exc_info)


def force_flush_logging():
    """Export buffered records, e.g. before the CLI exits."""
    if _logger_provider is not None:
        _logger_provider.force_flush()
