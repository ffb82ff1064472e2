"""
DIMACS CNF writer.
"""
from pathlib import Path
from typing import Iterable, Union

from ..formula.formula_utils import ClauseSet


def serialize_dimacs(cs: ClauseSet, comments: Iterable[str] = ()) -> bytes:
    """
    Render a clause set as DIMACS text.

    Args:
        cs: The formula.
        comments: Optional comment lines written before the header.

    Returns:
        ASCII bytes: header, then one 0-terminated clause per line.
    """
    lines = [f"c {comment}".rstrip() for comment in comments]
    lines.append(f"p cnf {cs.num_vars} {cs.num_clauses}")
    for literals in cs.to_lists():
        lines.append(" ".join(str(v) for v in literals + [0]))
    return ("\n".join(lines) + "\n").encode("ascii")


def dump_dimacs(cs: ClauseSet, path: Union[str, Path], comments: Iterable[str] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_dimacs(cs, comments))
    return path
