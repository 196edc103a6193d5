"""Error hierarchy shared by the library and the command line."""

from __future__ import annotations


class VermaBranchError(RuntimeError):
    """Base class for every error raised on purpose by this package."""

    exit_code = 1


class UsageError(VermaBranchError):
    """Raised when input is malformed or outside what the library supports."""

    exit_code = 2


class RefusalError(VermaBranchError):
    """Raised when a mathematical precondition (Condition A or B) fails."""

    exit_code = 3


class ConstructionError(VermaBranchError):
    """Raised when an internal consistency check fails."""

    exit_code = 1
