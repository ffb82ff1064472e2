"""
State types for the quantum step.

Basis convention for an (n+1)-qubit register |x_1, ..., x_n, y>:

    index = (x as an n-bit integer, x_1 most significant) * 2 + y

so y is the least significant bit, amplitudes[0::2] is the y=0 sector and
amplitudes[1::2] is the y=1 sector.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ..errors import InputError

NORM_TOLERANCE = 1e-12

PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def basis_index(x_index: int, y: int) -> int:
    return (x_index << 1) | (y & 1)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Immutable normalised state of n input qubits plus one ancilla."""

    n: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be positive, got {self.n}")
        amplitudes = np.array(self.amplitudes, dtype=np.complex128, copy=True).reshape(-1)
        expected = 1 << (self.n + 1)
        if amplitudes.shape[0] != expected:
            raise InputError(f"expected {expected} amplitudes for n={self.n}, got {amplitudes.shape[0]}")
        norm = float(np.linalg.norm(amplitudes))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InputError(f"state is not normalised (norm={norm!r})")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def dimension(self) -> int:
        return self.amplitudes.shape[0]

    def amplitude(self, x_index: int, y: int) -> complex:
        return complex(self.amplitudes[basis_index(x_index, y)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def sector(self, y: int) -> np.ndarray:
        """Unnormalised amplitudes of the y sector, indexed by x."""
        return self.amplitudes[y & 1::2]


@dataclass(frozen=True)
class ReducedQubitState:
    """|psi> = sqrt(1 - q^2)|0> + q|1> with q^2 = r / 2^n."""

    q_squared_exact: Fraction
    q_squared_float: float
    r: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self):
        exact = Fraction(self.q_squared_exact)
        if not 0 <= exact <= 1:
            raise InputError(f"q^2 must lie in [0, 1], got {exact}")
        if abs(float(exact) - self.q_squared_float) > 1e-15:
            raise InputError(
                f"exact q^2 {exact} and float q^2 {self.q_squared_float!r} disagree"
            )
        object.__setattr__(self, "q_squared_exact", exact)

    @classmethod
    def from_count(cls, r: int, n: int) -> "ReducedQubitState":
        exact = Fraction(r, 1 << n)
        return cls(exact, float(exact), r=r, n=n)

    @property
    def q(self) -> float:
        return self.q_squared_float ** 0.5


@dataclass(frozen=True)
class QubitDensityMatrix:
    """
    Diagonal one-qubit state rho = p0 P0 + p1 P1.

    The entries may be floats or exact rationals; both are numbers.Real.
    """

    p0: numbers.Real
    p1: numbers.Real

    def __post_init__(self):
        if self.p0 < 0 or self.p1 < 0:
            raise InputError(f"diagonal entries must be non-negative, got ({self.p0}, {self.p1})")
        if abs((self.p0 + self.p1) - 1) > NORM_TOLERANCE:
            raise InputError(f"trace must be 1, got {self.p0 + self.p1}")

    def trace(self) -> numbers.Real:
        return self.p0 + self.p1

    def as_matrix(self) -> np.ndarray:
        return np.diag([float(self.p0), float(self.p1)]).astype(complex)
