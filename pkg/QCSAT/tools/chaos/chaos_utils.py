"""
Types shared by the chaotic amplifier.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..errors import InputError
from ..quantum.quantum_utils import QubitDensityMatrix
from ..settings import get_default_settings, get_logistic_parameter

# Strict: a sample equal to 1/2 has not crossed.
CROSSING_THRESHOLD = get_default_settings()["logistic"]["threshold"]


def check_parameter(a: float) -> float:
    if not 0.0 <= a <= 4.0:
        raise InputError(f"logistic parameter a must lie in [0, 4], got {a!r}")
    return a


def check_unit_interval(x: float, name: str = "x") -> float:
    if not 0.0 <= x <= 1.0:
        raise InputError(f"{name} must lie in [0, 1], got {x!r}")
    return x


@dataclass(frozen=True)
class LogisticParams:
    """Parameters of g(x) = a x (1 - x) and the number of steps to run."""

    max_steps: int
    a: float = field(default_factory=get_logistic_parameter)

    def __post_init__(self):
        check_parameter(self.a)
        if isinstance(self.max_steps, bool) or not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise InputError(f"max_steps must be a positive integer, got {self.max_steps!r}")

    @classmethod
    def for_formula(cls, n: int, a: Optional[float] = None) -> "LogisticParams":
        """Steps J = {0, 1, ..., 2n} for an n-variable formula."""
        if a is None:
            return cls(max_steps=2 * n)
        return cls(max_steps=2 * n, a=a)


@dataclass(frozen=True)
class AmplifierTrace:
    """
    Samples (m, M_m) for m = 0..max_steps.

    Samples after first_crossing are still recorded but sit in the chaotic
    regime; they are sensitive to rounding and are not reproducible pointwise
    across platforms or precisions.
    """

    x0: float
    samples: Tuple[Tuple[int, float], ...]
    first_crossing: Optional[int] = None

    @property
    def values(self) -> Tuple[float, ...]:
        return tuple(value for _, value in self.samples)

    @property
    def crossed(self) -> bool:
        return self.first_crossing is not None


@dataclass(frozen=True)
class DensityTrace:
    """An amplifier trace together with the density matrices rho_m."""

    trace: AmplifierTrace
    states: Tuple[QubitDensityMatrix, ...]
