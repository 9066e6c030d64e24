from .file import JsonFileLogExporter, JsonFileSpanExporter

__all__ = [
    "JsonFileLogExporter",
    "JsonFileSpanExporter",
]
