from .defs import *

from .base import *
from .platform import *

from .data import *
