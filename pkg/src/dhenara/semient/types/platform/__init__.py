from ._exceptions import *
