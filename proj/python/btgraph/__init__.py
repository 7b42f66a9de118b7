"""Random irrigation subgraphs of random geometric graphs."""

from ._core import *  # noqa: F401,F403
from ._core import generator_version  # noqa: F401

__version__ = "1.0.0"
