"""Exact reversive-symbol computations for restricted polygon dissection counts."""

from ._reversive import *  # noqa: F401,F403
from ._reversive import __version__  # noqa: F401
