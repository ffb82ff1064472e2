"""
Exception hierarchy shared by every QCSAT tool.
"""


class QCSATError(Exception):
    """Base class for all QCSAT errors."""


class InputError(QCSATError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class ResourceError(QCSATError):
    """A problem is too large for the configured enumeration or statevector limit."""

    def __init__(self, message: str, n: int, limit: int):
        super().__init__(message)
        self.n = n
        self.limit = limit


class UsageError(QCSATError):
    """Invalid combination of command-line parameters."""
