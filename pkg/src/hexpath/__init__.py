"""Exact enumeration of packing paths in the hexagonal circle packing."""
from .steps import PackingPath, Step, parse_path

__version__ = "0.1.0"

__all__ = ["PackingPath", "Step", "parse_path", "__version__"]
