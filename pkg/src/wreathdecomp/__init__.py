"""Construct and certify hamiltonian decompositions of wreath products of digraphs."""

__version__ = "0.1.0"
