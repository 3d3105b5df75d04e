"""Edge posets, quotients of boolean algebras by permutation groups, and Peck checks."""

from ._edgeposet import *  # noqa: F401,F403
from ._edgeposet import Error, figures  # noqa: F401

__version__ = "0.1.0"
