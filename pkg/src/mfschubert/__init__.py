"""Multiplicity-free products of Schubert classes on Grassmannians."""

__version__ = "0.1.0"
