import logging
from typing import Any, Literal

from pydantic import Field, field_validator

from dhenara.semient.types.base import BaseModel

from ._log_config import LogConfig, LogLevelType


class ObservabilitySettings(BaseModel):
    service_name: str = "dhenara-semient"
    tracing_exporter_type: Literal["console", "file", "otlp"] = "console"
    logging_exporter_type: Literal["console", "file", "otlp"] = "console"
    otlp_endpoint: str | None = None

    enable_tracing: bool = False
    enable_logging: bool = True
    trace_file_path: str | None = None
    log_file_path: str | None = None

    # For all log msgs in observability package
    observability_logger_name: str = "dhenara.semient.observability"

    log_config: LogConfig = Field(default_factory=LogConfig)
    root_log_level: LogLevelType = "WARNING"

    @field_validator("root_log_level", mode="before")
    @classmethod
    def convert_int_log_level(cls, v: Any) -> str:
        """Accept integer levels from the `logging` module."""
        if isinstance(v, int):
            level_mapping = {
                logging.CRITICAL: "CRITICAL",
                logging.ERROR: "ERROR",
                logging.WARNING: "WARNING",
                logging.INFO: "INFO",
                logging.DEBUG: "DEBUG",
                logging.NOTSET: "NOTSET",
            }
            return level_mapping.get(v, "WARNING")
        if isinstance(v, str):
            return v.upper()
        return v
