"""Casimir scalars, Condition B and singular vectors of generalized Verma modules."""
