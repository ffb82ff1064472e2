"""
Reduction of the register to the one-qubit state that feeds the amplifier.
"""
import logging
from fractions import Fraction
from typing import Optional

from ..errors import InputError
from ..formula.count_roots import count_roots
from ..formula.formula_utils import ClauseSet
from .quantum_utils import QubitDensityMatrix, ReducedQubitState, StateVector
from .statevector import measure_last_qubit_prob

logger = logging.getLogger(__name__)


def exact_q_squared(cs: ClauseSet, limit: Optional[int] = None, workers: int = 1) -> ReducedQubitState:
    """
    q^2 = r / 2^n by counting roots, as an exact rational plus a float.

    Raises:
        ResourceError: propagated from count_roots.
    """
    r = count_roots(cs, limit=limit, workers=workers)
    return ReducedQubitState.from_count(r, cs.num_vars)


def reduced_state_from_statevector(s: StateVector) -> ReducedQubitState:
    """
    Recover q^2 = r / 2^n from the measured ancilla probability.

    Only meaningful for states produced by the oracle pipeline, whose
    probability is a multiple of 2^-n up to rounding.
    """
    p = measure_last_qubit_prob(s)
    scale = 1 << s.n
    r = round(p * scale)
    if abs(p - r / scale) > 1e-9:
        raise InputError(f"probability {p!r} is not a multiple of 2^-{s.n}")
    logger.debug("measured probability %r -> r=%d", p, r)
    return ReducedQubitState.from_count(r, s.n)


def reduced_density(qs: ReducedQubitState) -> QubitDensityMatrix:
    """rho = q^2 P1 + (1 - q^2) P0, kept exact."""
    q2 = Fraction(qs.q_squared_exact)
    return QubitDensityMatrix(p0=1 - q2, p1=q2)
