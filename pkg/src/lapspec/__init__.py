"""Spectra of standardized Laplacian matrices of weighted digraphs."""
__version__ = "0.1.0"
