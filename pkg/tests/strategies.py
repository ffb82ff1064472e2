"""Hypothesis strategies for formulas."""
from hypothesis import strategies as st

from QCSAT.tools.formula.formula_utils import ClauseSet


@st.composite
def clause_sets(draw, max_vars: int = 6, max_clauses: int = 8, max_width: int = 4):
    n = draw(st.integers(min_value=1, max_value=max_vars))
    literal = st.integers(min_value=1, max_value=n).flatmap(lambda v: st.sampled_from((v, -v)))
    clauses = draw(st.lists(st.lists(literal, max_size=max_width), max_size=max_clauses))
    return ClauseSet.from_lists(n, clauses)
