import logging
import os

from dhenara.semient.types import ObservabilitySettings

from .logging import setup_logging
from .tracing import setup_tracing


def configure_observability(settings: ObservabilitySettings) -> None:
    """Set up logging, then tracing when enabled.

    An unset OTLP endpoint falls back to `OTEL_EXPORTER_OTLP_ENDPOINT`.
    """
    if not settings.otlp_endpoint:
        settings.otlp_endpoint = os.environ.get("OTEL_EXPORTER_OTLP_ENDPOINT")

    if settings.enable_logging:
        setup_logging(settings)

    if settings.enable_tracing:
        setup_tracing(settings)

    logging.getLogger(settings.observability_logger_name).info(
        f"Observability configured for {settings.service_name}: logs={settings.logging_exporter_type}, "
        f"tracing={'on' if settings.enable_tracing else 'off'}"
    )
