"""Combinatorial models of simple drawings of complete graphs."""

__version__ = "0.1.0"
