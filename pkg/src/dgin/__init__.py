"""Borel-fixed ideals, extensor terms and double-generic initial ideals."""

__version__ = "0.1.0"
