"""Exact construction and verification of diagonal Ising form factors."""

__version__ = "0.1.0"
