"""
Boolean polynomial encoding of a clause set.

    f_A(x) = prod_i ( 1 + prod_{a in S_i} (1 - x_a) * prod_{b in T_i} x_b )   (mod 2)

Clause i maps to S_i = positive literal indices and T_i = negated literal
indices. The inner product is 1 exactly when every literal of clause i is
false, so each factor equals t(C_i).
"""
from typing import List, Tuple

from .formula_utils import Assignment, ClauseSet, IndexSetFamily, ensure_assignment_covers


def to_index_sets(cs: ClauseSet) -> IndexSetFamily:
    """Translate a clause set to its family {(S_i, T_i)}."""
    entries: List[Tuple[frozenset, frozenset]] = []
    for clause in cs.clauses:
        s = frozenset(lit.var_index for lit in clause.literals if not lit.negated)
        t = frozenset(lit.var_index for lit in clause.literals if lit.negated)
        entries.append((s, t))
    return IndexSetFamily(cs.num_vars, tuple(entries))


def eval_boolean_polynomial(fam: IndexSetFamily, a: Assignment) -> int:
    """
    Evaluate f_A at a with all arithmetic in GF(2).

    Returns:
        0 or 1. An empty family evaluates to 1 (empty product).
    """
    ensure_assignment_covers(a, fam.n)
    x = [int(v) for v in a.values]

    value = 1
    for s, t in fam.entries:
        term = 1
        for index in s:
            term = (term * (1 - x[index - 1])) % 2
        for index in t:
            term = (term * x[index - 1]) % 2
        value = (value * ((1 + term) % 2)) % 2
        if value == 0:
            break
    return value
