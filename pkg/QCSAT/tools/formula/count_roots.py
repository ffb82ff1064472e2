"""
Exhaustive root counting: r = |{x : f(x) = 1}| over all 2^n assignments.

Cost is exponential in n. The enumeration is vectorised with numpy in
chunks of assignment indices, and chunks may be spread over a thread pool;
the count does not depend on the chunking or the number of workers.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional

import numpy as np

from ..errors import InputError, ResourceError
from ..settings import get_chunk_size, get_enumeration_limit
from .formula_utils import Assignment, ClauseSet
from .truth import truth_of_clause_set

logger = logging.getLogger(__name__)


def check_enumeration_limit(n: int, limit: Optional[int] = None) -> int:
    """Raise ResourceError if 2^n assignments exceed the enumeration limit."""
    if limit is None:
        limit = get_enumeration_limit()
    if n > limit:
        raise ResourceError(
            f"n={n} exceeds the enumeration limit of {limit} variables", n=n, limit=limit
        )
    return limit


def satisfying_mask(cs: ClauseSet, start: int, stop: int) -> np.ndarray:
    """
    Evaluate the clause set on assignment indices start..stop-1.

    Args:
        cs: The formula.
        start: First assignment index (inclusive).
        stop: Last assignment index (exclusive), at most 2^n.

    Returns:
        Boolean array; element i is t(C) for Assignment.from_index(start + i, n).
    """
    n = cs.num_vars
    if not 0 <= start <= stop <= (1 << n):
        raise InputError(f"index range [{start}, {stop}) outside 0..2^{n}")

    indices = np.arange(start, stop, dtype=np.int64)
    bits: Dict[int, np.ndarray] = {}

    def bit(var_index: int) -> np.ndarray:
        if var_index not in bits:
            bits[var_index] = ((indices >> (n - var_index)) & 1).astype(bool)
        return bits[var_index]

    mask = np.ones(indices.shape, dtype=bool)
    for clause in cs.clauses:
        satisfied = np.zeros(indices.shape, dtype=bool)
        for lit in clause.literals:
            column = bit(lit.var_index)
            satisfied |= ~column if lit.negated else column
        mask &= satisfied
        if not mask.any():
            break
    return mask


def count_roots(
    cs: ClauseSet,
    limit: Optional[int] = None,
    chunk_size: Optional[int] = None,
    workers: int = 1,
) -> int:
    """
    Count the satisfying assignments of cs by exhaustive enumeration.

    Args:
        cs: The formula.
        limit: Largest admissible n; defaults to the configured enumeration limit.
        chunk_size: Assignments evaluated per numpy batch.
        workers: Threads sharing the chunks. 1 runs inline.

    Returns:
        r with 0 <= r <= 2^n.

    Raises:
        ResourceError: if n exceeds the limit.
    """
    check_enumeration_limit(cs.num_vars, limit)
    if chunk_size is None:
        chunk_size = get_chunk_size()
    if chunk_size < 1:
        raise InputError(f"chunk_size must be positive, got {chunk_size}")

    total = 1 << cs.num_vars
    num_chunks = -(-total // chunk_size)
    logger.debug("enumerating 2^%d assignments in %d chunk(s)", cs.num_vars, num_chunks)

    def count_span(span) -> int:
        lo, hi = span
        return sum(
            int(np.count_nonzero(satisfying_mask(cs, start, min(start + chunk_size, hi))))
            for start in range(lo, hi, chunk_size)
        )

    if workers > 1 and num_chunks > 1:
        # one contiguous stripe of whole chunks per worker
        stripe = -(-num_chunks // workers) * chunk_size
        stripes = [(lo, min(lo + stripe, total)) for lo in range(0, total, stripe)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(count_span, stripes))
    return count_span((0, total))


def count_roots_reference(cs: ClauseSet, limit: Optional[int] = None) -> int:
    """
    Independent root count: walks assignments in lexicographic order of
    (x_n, ..., x_1) in pure Python and applies truth_of_clause_set directly.
    """
    check_enumeration_limit(cs.num_vars, limit)
    r = 0
    for reversed_values in itertools.product((False, True), repeat=cs.num_vars):
        if truth_of_clause_set(cs, Assignment(tuple(reversed(reversed_values)))):
            r += 1
    return r
