"""Exact period-span bounds for Riemann surfaces with many automorphisms."""

__version__ = "0.1.0"
