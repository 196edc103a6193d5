"""Finite-dimensional modules of Levi subalgebras and their characters."""
