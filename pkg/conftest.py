"""
Shared fixtures for the QCSAT test suite.
"""
from pathlib import Path

import pytest

from QCSAT.tools.settings import ENUMERATION_LIMIT_ENV

# (x1 v ~x2) ^ (~x1) ^ (x2 v ~x3): only 000 satisfies it, r = 1.
POS_EXAMPLE = "c product-of-sums example\np cnf 3 3\n1 -2 0\n-1 0\n2 -3 0\n"
CONTRADICTION = "p cnf 1 2\n1 0\n-1 0\n"
EMPTY_FORMULA = "p cnf 2 0\n"


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(ENUMERATION_LIMIT_ENV, raising=False)


@pytest.fixture
def pos_dimacs() -> str:
    return POS_EXAMPLE


@pytest.fixture
def contradiction_dimacs() -> str:
    return CONTRADICTION


@pytest.fixture
def empty_dimacs() -> str:
    return EMPTY_FORMULA


@pytest.fixture
def write_cnf(tmp_path):
    """Write DIMACS text to a file under tmp_path and return its path."""

    def write(text, name: str = "formula.cnf") -> Path:
        path = tmp_path / name
        if isinstance(text, bytes):
            path.write_bytes(text)
        else:
            path.write_text(text)
        return path

    return write
