from ._log_config import LogConfig, LogLevelType
from ._observability import ObservabilitySettings

__all__ = [
    "LogConfig",
    "LogLevelType",
    "ObservabilitySettings",
]
