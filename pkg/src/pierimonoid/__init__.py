"""Operator monoids on infinite posets and their interval quasisymmetric functions."""

__version__ = "0.1.0"
