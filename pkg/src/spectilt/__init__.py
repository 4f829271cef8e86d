"""Exact commutative-algebra engine for tilting/cotilting classification data."""

__version__ = "0.1.0"
