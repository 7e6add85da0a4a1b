"""Exact computations with dendriform algebras and their extending structures."""

__version__ = "0.1.0"
