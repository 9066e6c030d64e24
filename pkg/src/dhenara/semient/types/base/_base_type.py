import json
from enum import Enum
from pathlib import Path

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict


class BaseEnum(str, Enum):
    """Base class for all string enum definitions."""

    def __str__(self) -> str:
        return self.value

    @classmethod
    def values(cls) -> list[str]:
        return [member.value for member in cls]


class BaseModel(PydanticBaseModel):
    """Base class for all pydantic model definitions."""

    model_config = ConfigDict(
        use_enum_values=False,
        validate_assignment=True,
    )

    @classmethod
    def from_json_file(cls, file_path: str | Path):
        """
        Load a model instance from a JSON file.

        Args:
            file_path: Path to the JSON file

        Returns:
            An instance of the model

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: If the file cannot be read or contains invalid JSON
            ValidationError: If the JSON data doesn't match the model
        """
        path = Path(file_path)

        if not path.exists():
            raise FileNotFoundError(f"File not found: {file_path}")

        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in file {file_path}: {e!s}")
        except OSError as e:
            raise ValueError(f"Error while reading file: {file_path}: {e}")

        # This will raise ValidationError if data doesn't match the model
        return cls.model_validate(data)

    def to_json_file(self, file_path: str | Path, indent: int = 2) -> Path:
        """Write the model as JSON, creating parent directories as needed."""
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.model_dump_json(indent=indent), encoding="utf-8")
        return path
