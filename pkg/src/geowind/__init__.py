"""Exact construction and validation of the ten-face pole-anchored wing set."""

from importlib import metadata

try:
    __version__ = metadata.version("geowind")
except metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

__all__ = ["__version__"]
