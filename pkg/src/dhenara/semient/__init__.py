"""Public interface for the Dhenara semi-continuous MaxEnt toolkit."""

from pkgutil import extend_path

__path__ = extend_path(__path__, __name__)

from .types import *  # noqa: F403,F401
from .config import *  # noqa: F403,F401
from .observability import *  # noqa: F403,F401

from .numerics import *  # noqa: F403,F401
from .density import *  # noqa: F403,F401
from .inner import *  # noqa: F403,F401
from .solvers import *  # noqa: F403,F401
from .simulate import *  # noqa: F403,F401
from .stations import *  # noqa: F403,F401

__version__ = "0.1.0"
