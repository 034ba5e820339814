"""Finite nearfields, the automorphisms of their multiplicative groups, and
near vector space counting."""

__version__ = "0.1.0"
