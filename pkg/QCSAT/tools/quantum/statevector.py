"""
Preparation and measurement of the (n+1)-qubit register.
"""
import logging
import math
from typing import Optional

import numpy as np

from ..errors import InputError, ResourceError
from ..settings import get_statevector_limit
from .quantum_utils import StateVector

logger = logging.getLogger(__name__)


def check_statevector_limit(n: int, limit: Optional[int] = None) -> int:
    if limit is None:
        limit = get_statevector_limit()
    if n > limit:
        raise ResourceError(
            f"n={n} exceeds the statevector limit of {limit} qubits "
            f"(2^{n + 1} amplitudes)", n=n, limit=limit,
        )
    return limit


def uniform_superposition(n: int, limit: Optional[int] = None) -> StateVector:
    """
    |v> = 2^(-n/2) sum_x |x, 0>, the output of step (i).

    Args:
        n: Number of input qubits.
        limit: Largest admissible n; defaults to the configured statevector limit.

    Raises:
        ResourceError: if n exceeds the limit.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    check_statevector_limit(n, limit)
    logger.debug("allocating statevector with 2^%d amplitudes", n + 1)

    amplitudes = np.zeros(1 << (n + 1), dtype=np.complex128)
    amplitudes[0::2] = 1.0 / math.sqrt(1 << n)
    return StateVector(n, amplitudes)


def measure_last_qubit_prob(s: StateVector) -> float:
    """
    ||P|s>||^2 for P = I (x) |1><1|: the probability of finding the ancilla in |1>.

    The sum is exactly rounded (math.fsum), so it does not depend on summation order.
    """
    weights = np.abs(s.sector(1)) ** 2
    p = math.fsum(weights.tolist())
    return min(max(p, 0.0), 1.0)


def sample_last_qubit(s: StateVector, shots: int, seed: Optional[int] = None) -> int:
    """
    Measure the ancilla `shots` times on fresh copies of s.

    Returns:
        Number of |1> outcomes, distributed as Binomial(shots, ||P|s>||^2).
    """
    if shots < 0:
        raise InputError(f"shots must be non-negative, got {shots}")
    rng = np.random.default_rng(seed)
    return int(rng.binomial(shots, measure_last_qubit_prob(s)))
