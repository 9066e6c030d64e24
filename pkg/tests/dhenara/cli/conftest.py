import logging

import pytest
from click.testing import CliRunner

from dhenara.semient.observability import reset_logging


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def fresh_logging():
    """Each invocation builds its console exporter on the runner's own stderr."""
    yield
    reset_logging()
    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
