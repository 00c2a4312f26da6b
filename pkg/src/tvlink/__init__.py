"""Turaev-Viro state sums and colored Jones evaluations for link complements."""

__version__ = "0.1.0"
