"""
Truth values of clauses and clause sets under an assignment.
"""

from .formula_utils import Assignment, Clause, ClauseSet, ensure_assignment_covers


def truth_of_clause(clause: Clause, a: Assignment) -> bool:
    """
    t(C): the join of the literal truth values.

    Args:
        clause: The clause to evaluate. An empty clause is false (empty join).
        a: Assignment covering every variable the clause mentions.

    Returns:
        True iff at least one literal evaluates true under a.

    Raises:
        InputError: if a literal references a variable outside the assignment.
    """
    # Check coverage first so an out-of-range literal is reported even
    # when an earlier literal already satisfies the clause.
    for lit in clause.literals:
        a.value_of(lit.var_index)
    return any(lit.evaluate(a.value_of(lit.var_index)) for lit in clause.literals)


def truth_of_clause_set(cs: ClauseSet, a: Assignment) -> bool:
    """
    t(C_1 ^ ... ^ C_m): the meet of the clause truth values.

    An empty clause list is true (empty meet).
    """
    ensure_assignment_covers(a, cs.num_vars)
    return all(truth_of_clause(clause, a) for clause in cs.clauses)
