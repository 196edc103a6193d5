"""Exact arithmetic, root data and Lie algebra structure."""
