"""Parabolic subalgebras, generalized Verma modules and branching multiplicities."""
