"""Frontiers, exact learning and unique characterisation of ELI queries under DL-Lite ontologies."""

from ._eliq import *  # noqa: F401,F403
from ._eliq import __version__  # noqa: F401
