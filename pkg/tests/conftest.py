import pytest

from dhenara.semient.config import ConfigurationContext
from dhenara.semient.observability.tracing import disable_tracing


@pytest.fixture(autouse=True)
def clean_config():
    """Every test starts from default settings with tracing off."""
    ConfigurationContext.reset()
    yield
    ConfigurationContext.reset()
    disable_tracing()
