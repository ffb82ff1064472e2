"""
The amplifier viewed on density matrices:

    rho_m = (I + g^m(q^2) sigma_3) / 2,    M_m = tr rho_m sigma_3 = g^m(q^2)

with sigma_3 = diag(1, -1). Diagonal entries are kept as exact rationals of
the float iterates, so tr rho_m sigma_3 returns M_m bit for bit.
"""
from fractions import Fraction

from ..quantum.quantum_utils import QubitDensityMatrix
from .chaos_utils import DensityTrace, LogisticParams
from .logistic import iterate_map


def density_from_expectation(value: float) -> QubitDensityMatrix:
    """diag((1 + M)/2, (1 - M)/2)."""
    exact = Fraction(value)
    return QubitDensityMatrix(p0=(1 + exact) / 2, p1=(1 - exact) / 2)


def expectation_sigma3(rho: QubitDensityMatrix) -> float:
    """tr rho sigma_3 = (entry on |0>) - (entry on |1>)."""
    return float(rho.p0 - rho.p1)


def density_iterate(rho0: QubitDensityMatrix, params: LogisticParams) -> DensityTrace:
    """
    Iterate the scalar q^2 = p1 of rho0 and report each step as rho_m.

    The scalar read of the update rule is used: g acts on q^2, not on
    tr rho0 sigma_3 = 1 - 2 q^2.
    """
    trace = iterate_map(float(rho0.p1), params)
    states = tuple(density_from_expectation(value) for value in trace.values)
    return DensityTrace(trace=trace, states=states)
