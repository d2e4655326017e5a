"""Skew informations and uncertainty relations for finite-dimensional quantum states."""

from ._core import *  # noqa: F401,F403
from ._core import SkewlabError, density, Observable, SkewParams

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
