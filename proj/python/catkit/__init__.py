"""Truncated-Fock-space cat-state witnesses, catability, and relativistic
diagnostics. Thin wrapper over the compiled _catkit extension."""

from _catkit import *  # noqa: F401,F403
from _catkit import __doc__  # noqa: F401

__version__ = "0.1.0"
