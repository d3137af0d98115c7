"""Birational geometry of the four-dimensional Garnier system in exact arithmetic."""

__version__ = "0.1.0"
