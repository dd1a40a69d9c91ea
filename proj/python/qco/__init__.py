"""Circuit-overhead bounds for single-qubit gate sets."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
