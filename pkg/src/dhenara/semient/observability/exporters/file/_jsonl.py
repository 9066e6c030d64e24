import json
from pathlib import Path
from typing import Any


def append_json_lines(file_path: Path, records: list[Any]) -> None:
    """Append OpenTelemetry records (anything with `to_json()`) as JSON lines."""
    file_path.parent.mkdir(parents=True, exist_ok=True)

    with open(file_path, "a", encoding="utf-8") as f:
        for record in records:
            payload = record.to_json()

            # to_json() returns an indented JSON string; re-serialize compactly
            if isinstance(payload, str):
                try:
                    payload = json.loads(payload)
                except json.JSONDecodeError:
                    f.write(payload.replace("\n", " ") + "\n")
                    continue

            f.write(json.dumps(payload) + "\n")
