"""Exact arithmetic for polycyclic monoids and their topology.

The heavy lifting lives in the compiled ``_polymon`` module; this package
re-exports its public surface.
"""

from ._polymon import *  # noqa: F401,F403
from ._polymon import checks  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
