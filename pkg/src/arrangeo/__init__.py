"""Exact computations on hyperplane arrangements in general position over Q."""

__version__ = "0.1.0"
