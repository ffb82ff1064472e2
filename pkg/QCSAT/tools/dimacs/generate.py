"""
Seeded random k-CNF generator for building test corpora.
"""
import random

from ..errors import InputError
from ..formula.formula_utils import Clause, ClauseSet, Literal


def generate_random_kcnf(n: int, m: int, k: int, seed: int) -> ClauseSet:
    """
    Draw a uniform random k-CNF.

    Each clause picks k distinct variables uniformly from x_1..x_n and negates
    each with probability 1/2. Identical arguments give identical formulas.

    Args:
        n: Number of variables (>= 1).
        m: Number of clauses (>= 1).
        k: Literals per clause, 1 <= k <= n.
        seed: Random seed.
    """
    if n < 1 or m < 1 or k < 1:
        raise InputError(f"n, m and k must be positive (got n={n}, m={m}, k={k})")
    if k > n:
        raise InputError(f"k={k} literals per clause needs at least k variables, got n={n}")

    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), k)
        clauses.append(Clause(frozenset(Literal(v, rng.random() < 0.5) for v in variables)))
    return ClauseSet(n, tuple(clauses))
