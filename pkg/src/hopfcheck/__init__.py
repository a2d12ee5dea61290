"""Exact verification of finite-dimensional Hopf *-algebra identities."""

__version__ = "0.1.0"
