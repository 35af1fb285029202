"""Planar surface codes: decoding, beta coefficients and logical error rates."""

__all__ = ["__version__"]
__version__ = "0.1.0"
