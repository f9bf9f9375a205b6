"""Nice copies of graphs: counting, exhaustive search and symmetrisation."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, Graph, GuardError, InternalError, ParseError  # noqa: F401
