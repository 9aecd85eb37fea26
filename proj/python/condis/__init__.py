"""Finite-function semantics for conjunctive and disjunctive deductions.

Everything lives in the compiled extension; this package re-exports it.
"""

from condis._core import *  # noqa: F401,F403
from condis._core import __doc__  # noqa: F401

__version__ = "0.1.0"
