"""A library to compute and verify geometric constants of two-dimensional normed planes."""

__version__ = '0.1.0'
