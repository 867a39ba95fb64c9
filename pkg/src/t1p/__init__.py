"""Recognition and embedding counting for triangulated 1-planar graphs."""

from __future__ import annotations

__version__ = "0.1.0"
