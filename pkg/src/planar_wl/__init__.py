"""Weisfeiler-Leman refinement and the structure of its colorings on planar graphs."""

__version__ = "0.1.0"
