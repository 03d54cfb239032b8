"""Exact equivariant Euler characteristics for finite group actions on
simplicial complexes."""

__version__ = "0.1.0"
