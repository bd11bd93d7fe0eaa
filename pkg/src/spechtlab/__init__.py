"""Exact computations with two-row shifted Specht modules and their ideals."""

__version__ = "0.1.0"
