"""Weak Carmichael numbers and related Carmichael-like classes."""

__version__ = "0.1.0"
