"""Walled Brauer algebras: cellular bases, cell modules and mixed tensor space."""

__version__ = "0.1.0"
