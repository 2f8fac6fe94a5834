"""Integer sets, windowed upper Banach density and sumset constructions."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BanachError,
    IntSet,
    __doc__,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
