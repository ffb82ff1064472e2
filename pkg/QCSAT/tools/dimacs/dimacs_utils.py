"""
Shared types for reading and writing DIMACS CNF.
"""
from dataclasses import dataclass
from typing import List, Sequence

from ..errors import InputError

WARNING = "warning"
ERROR = "error"


@dataclass(frozen=True)
class ParseDiagnostics:
    line: int
    message: str
    severity: str = ERROR

    def __str__(self):
        return f"line {self.line}: {self.severity}: {self.message}"


class DimacsError(InputError):
    """Raised when DIMACS input cannot be turned into a clause set."""

    def __init__(self, diagnostics: Sequence[ParseDiagnostics]):
        self.diagnostics: List[ParseDiagnostics] = list(diagnostics)
        errors = [d for d in self.diagnostics if d.severity == ERROR]
        super().__init__("; ".join(str(d) for d in errors) or "invalid DIMACS input")
