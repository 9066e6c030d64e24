import functools
import logging
import os
import threading
from collections.abc import Callable
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import yaml
from pydantic import ConfigDict, Field

from dhenara.semient.types.base import BaseModel
from dhenara.semient.types.data import LogLevelType

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "SEMIENT_THREADS"


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning(f"Ignoring non-integer {THREADS_ENV_VAR}={raw!r}")
        return 1


class _GlobalConfigData(BaseModel):
    """
    Base configuration model with all possible settings.

    Defaults mirror the published simulation setup (n=1000, 100 replications) and the solver tolerances
    used throughout the package.
    """

    # Solver settings
    eps: float = Field(
        1e-8,
        gt=0,
        description="Entropy-change stopping tolerance of the outer iterations",
    )
    max_iter: int = Field(
        200,
        ge=1,
        description="Maximum number of outer iterations",
    )
    gamma_offset: float = Field(
        0.01,
        gt=0,
        lt=1,
        description="Offset between the two seed points of the backward-difference update",
    )

    # Simulation settings
    n: int = Field(
        1000,
        ge=1,
        description="Sample size per replication",
    )
    replications: int = Field(
        100,
        ge=1,
        description="Number of Monte-Carlo replications",
    )
    seed: int = Field(
        7,
        ge=0,
        description="Root seed of every random stream",
    )

    # Station pipeline settings
    max_zero_prop: float = Field(
        0.6,
        gt=0,
        le=1,
        description="Stations must have a zero proportion strictly below this value",
    )
    min_positive: int = Field(
        30,
        ge=1,
        description="Minimum number of positive observations per station",
    )

    # Execution settings
    threads: int = Field(
        default_factory=_threads_from_env,
        ge=1,
        description=f"Worker threads for replications/stations (env {THREADS_ENV_VAR})",
    )
    out_dir: str = Field(
        "./out",
        description="Default output directory",
    )

    # Logging configuration
    log_level: LogLevelType = Field(
        "WARNING",
        description="Default logging level",
    )
    log_file: str | None = Field(
        None,
        description="Path to log file, if any",
    )

    model_config = ConfigDict(extra="allow")


class ConfigurationContext:
    """
    Thread-local configuration context manager.

    Manages the global configuration and per-thread overrides.

    Usage examples:
        # Set configuration values
        ConfigurationContext.initialize(eps=1e-10)

        # Load from file
        ConfigurationContext.load_config("semient_config.yaml", env="quick")

        # Temporarily override settings
        with ConfigurationContext.config_override(replications=10):
            ...
    """

    # Global configuration shared across all threads
    _global_config = _GlobalConfigData()

    # Thread-local storage for thread-specific configurations
    _thread_local = threading.local()

    # Track which config files were loaded
    _loaded_files: set[str] = set()

    @classmethod
    def initialize(cls, **kwargs) -> None:
        """Initialize the global configuration with provided values."""
        config_data = cls._global_config.model_dump()
        config_data.update(kwargs)
        cls._global_config = _GlobalConfigData.model_validate(config_data)

    @classmethod
    def reset(cls) -> None:
        """Restore defaults and forget loaded files."""
        cls._global_config = _GlobalConfigData()
        cls._loaded_files = set()
        cls.reset_thread_config()

    @classmethod
    def get_config(cls) -> _GlobalConfigData:
        """
        Get the current configuration.

        Returns the thread-local configuration if it exists, otherwise the global configuration.
        """
        if hasattr(cls._thread_local, "config"):
            return cls._thread_local.config
        return cls._global_config

    @classmethod
    def set_thread_config(cls, config: _GlobalConfigData) -> None:
        cls._thread_local.config = config

    @classmethod
    def reset_thread_config(cls) -> None:
        if hasattr(cls._thread_local, "config"):
            delattr(cls._thread_local, "config")

    @classmethod
    @contextmanager
    def config_override(cls, **kwargs):
        """
        Context manager for temporarily overriding configuration values.

        Creates a thread-local copy of the current configuration, applies the overrides, and restores the
        previous configuration when the context ends.

        Example:
            with ConfigurationContext.config_override(eps=1e-12):
                solution = aem(constraints, SolverConfig())
        """
        previous = getattr(cls._thread_local, "config", None)

        config_dict = cls.get_config().model_dump()
        config_dict.update(kwargs)
        cls.set_thread_config(_GlobalConfigData.model_validate(config_dict))
        try:
            yield cls.get_config()
        finally:
            if previous is None:
                cls.reset_thread_config()
            else:
                cls.set_thread_config(previous)

    @classmethod
    def bind_config(cls, fn: Callable[..., Any]) -> Callable[..., Any]:
        """Wrap `fn` to run under the configuration active at the call to `bind_config`.

        Worker threads start without the caller's overrides; jobs submitted to a pool go through this.
        """
        config = cls.get_config()

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            previous = getattr(cls._thread_local, "config", None)
            cls.set_thread_config(config)
            try:
                return fn(*args, **kwargs)
            finally:
                if previous is None:
                    cls.reset_thread_config()
                else:
                    cls.set_thread_config(previous)

        return wrapper

    @classmethod
    def load_config(cls, path: str | Path | None = None, env: str | None = None) -> Path | None:
        """
        Load configuration from a YAML file.

        Args:
            path: Optional specific path to a config file
            env: Optional environment section merged over the base values

        Returns:
            The path that was loaded, or None when no file was found.
        """
        paths_to_try = [
            Path(os.path.expanduser("~/.dhenara/semient/semient_config.yaml")),
            Path("./semient_config.yaml"),
        ]

        if path:
            path = Path(path)
            if not path.exists():
                raise FileNotFoundError(f"Config file not found: {path}")
            paths_to_try.insert(0, path)

        for config_path in paths_to_try:
            if config_path.exists() and str(config_path) not in cls._loaded_files:
                with open(config_path, encoding="utf-8") as f:
                    config_data = yaml.safe_load(f) or {}

                if env and env in config_data:
                    base_config = {k: v for k, v in config_data.items() if k != env}
                    config_data = {**base_config, **config_data[env]}

                existing_config = cls._global_config.model_dump()
                merged_config = {**existing_config, **config_data}
                cls._global_config = _GlobalConfigData.model_validate(merged_config)
                cls._loaded_files.add(str(config_path))
                logger.info(f"Loaded configuration from {config_path}")
                return config_path

        return None


def get_config() -> _GlobalConfigData:
    """Get the current configuration (thread-local override first)."""
    return ConfigurationContext.get_config()


bind_config = ConfigurationContext.bind_config
config_override = ConfigurationContext.config_override
load_config = ConfigurationContext.load_config
