from ._base_type import BaseModel, BaseEnum


__all__ = ["BaseEnum", "BaseModel"]
