"""Exact computer algebra for double forms over Euclidean space.

Thin re-export of the compiled core; see the project README for the
underlying conventions.
"""

from _biform import *  # noqa: F401,F403
from _biform import __doc__  # noqa: F401
