"""Exact-arithmetic duplicial towers and cyclic homology for finite-dimensional Hopf algebras."""

__version__ = "0.1.0"
