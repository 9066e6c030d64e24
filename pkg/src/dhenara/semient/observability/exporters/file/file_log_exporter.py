import logging
from collections.abc import Sequence
from pathlib import Path

from opentelemetry.sdk._logs.export import LogExporter, LogExportResult

from ._jsonl import append_json_lines

logger = logging.getLogger(__name__)


class JsonFileLogExporter(LogExporter):
    """Writes log records to a JSON-lines file."""

    def __init__(self, file_path: str | Path):
        self.file_path = Path(file_path)
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        self.file_path.touch(exist_ok=True)

    def export(self, batch: Sequence) -> LogExportResult:
        try:
            append_json_lines(self.file_path, [log_data.log_record for log_data in batch])
            return LogExportResult.SUCCESS
        except OSError as e:
            # Must not log through the handler being exported
            logging.getLogger("py.warnings").warning(f"Failed to export logs to {self.file_path}: {e}")
            return LogExportResult.FAILURE

    def shutdown(self) -> None:
        pass
