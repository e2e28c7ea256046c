"""Reversible gate calculus on {0,1}^Z built around asynchronous ECA 57."""

from ._gatecalc import *  # noqa: F401,F403
from ._gatecalc import __version__  # noqa: F401
