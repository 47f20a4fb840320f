"""Agent payoff asymmetry under skewed return distributions."""

from ._skingame import *  # noqa: F401,F403
from ._skingame import Error, __doc__  # noqa: F401

__version__ = "0.1.0"
