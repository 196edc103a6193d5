"""Exact branching of generalized Verma modules over reductive subalgebra embeddings."""

__all__ = ["__version__"]

__version__ = "0.1.0"
