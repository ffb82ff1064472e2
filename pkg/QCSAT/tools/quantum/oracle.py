"""
The oracle U_f |x, y> = |x, y XOR f(x)>, applied as a basis permutation.
"""
from typing import Callable, Union

import numpy as np

from ..errors import InputError
from ..formula.count_roots import satisfying_mask
from ..formula.formula_utils import Assignment, ClauseSet
from .quantum_utils import StateVector

Predicate = Union[ClauseSet, np.ndarray, Callable[[Assignment], object]]


def oracle_truth_table(f: Predicate, n: int) -> np.ndarray:
    """
    Materialise f as a boolean array over x = 0 .. 2^n - 1.

    Args:
        f: A ClauseSet (evaluated vectorised), a boolean array of length 2^n,
            or a callable taking an Assignment and returning a truthy value.
        n: Number of input bits.
    """
    size = 1 << n
    if isinstance(f, ClauseSet):
        if f.num_vars != n:
            raise InputError(f"formula has {f.num_vars} variables, state has {n} input qubits")
        return satisfying_mask(f, 0, size)
    if isinstance(f, np.ndarray):
        table = np.asarray(f, dtype=bool).reshape(-1)
        if table.shape[0] != size:
            raise InputError(f"truth table has {table.shape[0]} entries, expected {size}")
        return table
    if callable(f):
        return np.fromiter(
            (bool(f(Assignment.from_index(x, n))) for x in range(size)), dtype=bool, count=size
        )
    raise InputError(f"unsupported oracle predicate {type(f).__name__}")


def apply_oracle(s: StateVector, f: Predicate) -> StateVector:
    """
    Swap the (x, 0) and (x, 1) amplitudes for every x with f(x) = 1.

    A permutation of basis states: norm preserving and its own inverse.
    """
    table = oracle_truth_table(f, s.n)
    pairs = np.array(s.amplitudes).reshape(-1, 2)
    pairs[table] = pairs[table][:, ::-1]
    return StateVector(s.n, pairs.reshape(-1))
