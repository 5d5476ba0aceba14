"""Exact computation of asymptotic critical values of polynomial maps."""

__version__ = "0.1.0"
