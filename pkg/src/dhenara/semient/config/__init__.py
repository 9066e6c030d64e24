from ._config import (
    ConfigurationContext as ConfigurationContext,
    bind_config as bind_config,
    get_config as get_config,
    config_override as config_override,
    load_config as load_config,
)
