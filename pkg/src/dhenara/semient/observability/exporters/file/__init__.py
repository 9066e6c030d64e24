from .file_span_exporter import JsonFileSpanExporter
from .file_log_exporter import JsonFileLogExporter

__all__ = [
    "JsonFileLogExporter",
    "JsonFileSpanExporter",
]
