"""
DIMACS CNF parser.

Accepted input:
    c <comment>            anywhere, including among clauses
    p cnf <n> <m>          exactly once, before any clause data
    <lit> <lit> ... 0      clauses; a clause may span lines, -k means ~x_k
    %                      SATLIB trailer; it and everything after it is ignored
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..formula.formula_utils import Clause, ClauseSet, Literal
from .dimacs_utils import ERROR, WARNING, DimacsError, ParseDiagnostics

logger = logging.getLogger(__name__)


def _decode(data: Union[bytes, bytearray, str]) -> str:
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as e:
        line = bytes(data)[: e.start].count(b"\n") + 1
        raise DimacsError([ParseDiagnostics(line, f"input is not valid UTF-8: {e.reason}")])


def _parse_header(tokens: List[str], lineno: int) -> Tuple[int, int]:
    if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "cnf":
        raise DimacsError([ParseDiagnostics(lineno, f"malformed header {' '.join(tokens)!r}, expected 'p cnf <n> <m>'")])
    try:
        n, m = int(tokens[2]), int(tokens[3])
    except ValueError:
        raise DimacsError([ParseDiagnostics(lineno, "header counts must be integers")])
    if n < 1:
        raise DimacsError([ParseDiagnostics(lineno, f"number of variables must be positive, got {n}")])
    if m < 0:
        raise DimacsError([ParseDiagnostics(lineno, f"number of clauses must be non-negative, got {m}")])
    return n, m


def parse_dimacs_report(text: Union[bytes, bytearray, str]) -> Tuple[ClauseSet, List[ParseDiagnostics]]:
    """
    Parse DIMACS text.

    Args:
        text: File contents as bytes (UTF-8) or str. LF and CRLF line endings.

    Returns:
        The clause set and the list of warning diagnostics.

    Raises:
        DimacsError: on a missing or malformed header, a literal above n, an
            unterminated final clause, or any token that is not an integer.
    """
    source = _decode(text)
    warnings: List[ParseDiagnostics] = []

    header: Optional[Tuple[int, int]] = None
    header_line = 0
    clauses: List[Clause] = []
    pending: List[Literal] = []
    pending_line = 0
    trailer_line = 0
    lineno = 0

    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue

        if trailer_line:
            if line != "0":
                warnings.append(ParseDiagnostics(lineno, "content after '%' trailer ignored", WARNING))
            continue
        if line.startswith("c"):
            continue
        if line.startswith("%"):
            trailer_line = lineno
            continue
        if line.startswith("p"):
            if header is not None:
                raise DimacsError([ParseDiagnostics(lineno, f"duplicate header (first on line {header_line})")])
            header = _parse_header(line.split(), lineno)
            header_line = lineno
            continue

        if header is None:
            raise DimacsError([ParseDiagnostics(lineno, "clause data before 'p cnf' header")])
        n = header[0]

        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsError([ParseDiagnostics(lineno, f"invalid literal {token!r}")])
            if value == 0:
                clauses.append(Clause(frozenset(pending)))
                pending = []
                continue
            if abs(value) > n:
                raise DimacsError([ParseDiagnostics(lineno, f"literal {value} out of range for n={n}")])
            if not pending:
                pending_line = lineno
            pending.append(Literal.from_dimacs(value))

    if header is None:
        raise DimacsError([ParseDiagnostics(max(lineno, 1), "missing 'p cnf <n> <m>' header")])
    if pending:
        raise DimacsError([ParseDiagnostics(pending_line, "unterminated final clause (missing trailing 0)")])

    n, m = header
    if m != len(clauses):
        warnings.append(ParseDiagnostics(
            header_line, f"header declares {m} clauses but {len(clauses)} were read", WARNING
        ))

    return ClauseSet(n, tuple(clauses)), warnings


def parse_dimacs(text: Union[bytes, bytearray, str]) -> ClauseSet:
    """Parse DIMACS text, logging warnings and raising DimacsError on errors."""
    cs, warnings = parse_dimacs_report(text)
    for diagnostic in warnings:
        logger.warning("%s", diagnostic)
    return cs


def load_dimacs(path: Union[str, Path]) -> ClauseSet:
    """Read and parse a DIMACS file."""
    return parse_dimacs(Path(path).read_bytes())
