"""Extremal weight enumerators of self-dual codes."""

__version__ = "0.1.0"
