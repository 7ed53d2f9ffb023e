"""Ding-Helleseth generalized cyclotomic sequences of period p^n.

Exact construction of the classes and sequence, and exact checks of the
Gauss period, spectral, determinant and 2-adic complexity results. All big
integers are Python ints.
"""

from ._core import *  # noqa: F401,F403
from ._core import CapExceeded, Params, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
