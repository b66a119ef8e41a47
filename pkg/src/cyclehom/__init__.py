"""Exact homology toolkit for graph-coloring complexes of cycles."""

__version__ = "0.1.0"
