"""Exact operator calculus for Fuchsian differential equations."""

__version__ = "0.1.0"
