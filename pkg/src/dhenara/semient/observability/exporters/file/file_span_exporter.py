import logging
from collections.abc import Sequence
from pathlib import Path

from opentelemetry.sdk.trace import ReadableSpan
from opentelemetry.sdk.trace.export import SpanExporter, SpanExportResult

from ._jsonl import append_json_lines

logger = logging.getLogger(__name__)


class JsonFileSpanExporter(SpanExporter):
    """Writes finished spans to a JSON-lines file."""

    def __init__(self, file_path: str | Path):
        self.file_path = Path(file_path)
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        self.file_path.touch(exist_ok=True)
        logger.debug(f"JSON file span exporter writing to {self.file_path}")

    def export(self, spans: Sequence[ReadableSpan]) -> SpanExportResult:
        try:
            append_json_lines(self.file_path, list(spans))
            return SpanExportResult.SUCCESS
        except OSError as e:
            logger.error(f"Failed to export spans to file: {e}", exc_info=True)
            return SpanExportResult.FAILURE

    def shutdown(self) -> None:
        pass
