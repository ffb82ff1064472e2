"""
Logistic-map iteration x_{m+1} = a x_m (1 - x_m) and first-crossing detection.
"""
import logging
from typing import List, Optional, Tuple

from ..errors import QCSATError
from .chaos_utils import (
    CROSSING_THRESHOLD,
    AmplifierTrace,
    LogisticParams,
    check_parameter,
    check_unit_interval,
)

logger = logging.getLogger(__name__)

# Relative slack for comparing two rounded products in the growth check.
GROWTH_TOLERANCE = 4e-16


def logistic_step(x: float, a: float) -> float:
    """
    One application of g(x) = a x (1 - x).

    Raises:
        InputError: if x is outside [0, 1] or a outside [0, 4].
    """
    check_unit_interval(x)
    check_parameter(a)
    value = a * x * (1.0 - x)
    if not 0.0 <= value <= 1.0:
        raise QCSATError(f"logistic step left [0, 1]: g({x!r}) = {value!r} for a={a!r}")
    return value


def iterate_map(x0: float, params: LogisticParams) -> AmplifierTrace:
    """
    Samples g^m(x0) for m = 0..params.max_steps.

    first_crossing is the least m with g^m(x0) > 1/2, if any.
    """
    x = check_unit_interval(float(x0), "x0")
    samples: List[Tuple[int, float]] = [(0, x)]
    first_crossing: Optional[int] = 0 if x > CROSSING_THRESHOLD else None

    for m in range(1, params.max_steps + 1):
        x = logistic_step(x, params.a)
        samples.append((m, x))
        if first_crossing is None and x > CROSSING_THRESHOLD:
            first_crossing = m

    if first_crossing is not None:
        logger.debug("x0=%r crossed 1/2 at m=%d (a=%r)", x0, first_crossing, params.a)
    return AmplifierTrace(x0=float(x0), samples=tuple(samples), first_crossing=first_crossing)


def find_first_crossing(x0: float, params: LogisticParams) -> Optional[int]:
    """Least m <= max_steps with g^m(x0) > 1/2, or None."""
    x = check_unit_interval(float(x0), "x0")
    for m in range(params.max_steps + 1):
        if x > CROSSING_THRESHOLD:
            return m
        if m < params.max_steps:
            x = logistic_step(x, params.a)
    return None


def pre_crossing_growth_holds(trace: AmplifierTrace, a: float) -> bool:
    """
    Check x_{m+1} >= (a/2) x_m for every m before the first crossing
    (for every recorded m when the trace never crosses).
    """
    values = trace.values
    stop = trace.first_crossing if trace.first_crossing is not None else len(values) - 1
    for m in range(stop):
        bound = (a / 2.0) * values[m]
        if values[m + 1] < bound * (1.0 - GROWTH_TOLERANCE):
            return False
    return True
