"""Orthic triangles, Fagnano's problem and the pi/4 characterization."""

from ._core import *  # noqa: F401,F403
from ._core import ConstructionError, PreconditionError  # noqa: F401

__version__ = "0.1.0"
