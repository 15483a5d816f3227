"""Lights Out over GF(2): solving, vertex classification and tree certificates."""

__version__ = "0.1.0"
