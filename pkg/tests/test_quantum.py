from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from QCSAT.tools.dimacs.generate import generate_random_kcnf
from QCSAT.tools.errors import InputError, ResourceError
from QCSAT.tools.formula.count_roots import count_roots
from QCSAT.tools.formula.formula_utils import ClauseSet
from QCSAT.tools.formula.truth import truth_of_clause_set
from QCSAT.tools.quantum.oracle import apply_oracle, oracle_truth_table
from QCSAT.tools.quantum.quantum_utils import (
    PAULI_Z,
    QubitDensityMatrix,
    ReducedQubitState,
    StateVector,
    basis_index,
)
from QCSAT.tools.quantum.reduced_state import (
    exact_q_squared,
    reduced_density,
    reduced_state_from_statevector,
)
from QCSAT.tools.quantum.statevector import (
    measure_last_qubit_prob,
    sample_last_qubit,
    uniform_superposition,
)

from .strategies import clause_sets


def pos_example() -> ClauseSet:
    return ClauseSet.from_lists(3, [[1, -2], [-1], [2, -3]])


class TestStateVector:
    def test_uniform_superposition(self):
        s = uniform_superposition(3)
        assert s.dimension == 16
        assert s.norm() == pytest.approx(1.0, abs=1e-12)
        assert np.all(s.sector(1) == 0)
        assert np.allclose(s.sector(0), 1 / np.sqrt(8))

    def test_amplitudes_are_read_only(self):
        s = uniform_superposition(2)
        with pytest.raises(ValueError):
            s.amplitudes[0] = 1.0

    def test_rejects_unnormalised_state(self):
        with pytest.raises(InputError):
            StateVector(1, np.array([1.0, 1.0, 0.0, 0.0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(InputError):
            StateVector(2, np.array([1.0, 0.0]))

    def test_basis_index_puts_ancilla_last(self):
        assert basis_index(0b101, 1) == 0b1011

    def test_statevector_limit(self):
        with pytest.raises(ResourceError) as excinfo:
            uniform_superposition(21)
        assert excinfo.value.limit == 20

    def test_explicit_limit(self):
        with pytest.raises(ResourceError):
            uniform_superposition(5, limit=4)


class TestOracle:
    def test_marks_satisfying_inputs(self):
        s = apply_oracle(uniform_superposition(3), pos_example())
        amp = 1 / np.sqrt(8)
        assert s.amplitude(0, 1) == pytest.approx(amp)
        assert s.amplitude(0, 0) == 0
        for x in range(1, 8):
            assert s.amplitude(x, 0) == pytest.approx(amp)
            assert s.amplitude(x, 1) == 0

    @given(clause_sets(max_vars=7))
    @settings(max_examples=100, deadline=None)
    def test_oracle_is_a_norm_preserving_involution(self, cs):
        rng = np.random.default_rng(cs.num_vars)
        raw = rng.normal(size=1 << (cs.num_vars + 1)) + 1j * rng.normal(size=1 << (cs.num_vars + 1))
        s = StateVector(cs.num_vars, raw / np.linalg.norm(raw))
        once = apply_oracle(s, cs)
        assert once.norm() == pytest.approx(1.0, abs=1e-12)
        assert np.array_equal(apply_oracle(once, cs).amplitudes, s.amplitudes)

    def test_predicate_forms_agree(self):
        cs = pos_example()
        table = oracle_truth_table(cs, 3)
        assert np.array_equal(oracle_truth_table(lambda a: truth_of_clause_set(cs, a), 3), table)
        assert np.array_equal(oracle_truth_table(table.astype(int), 3), table)

    def test_predicate_size_must_match(self):
        with pytest.raises(InputError):
            oracle_truth_table(pos_example(), 4)
        with pytest.raises(InputError):
            oracle_truth_table(np.zeros(7, dtype=bool), 3)


class TestMeasurement:
    @pytest.mark.parametrize(
        "cs, expected",
        [
            (pos_example(), 0.125),
            (ClauseSet.from_lists(1, [[1], [-1]]), 0.0),
            (ClauseSet(3, ()), 1.0),
        ],
    )
    def test_probability_is_root_fraction(self, cs, expected):
        s = apply_oracle(uniform_superposition(cs.num_vars), cs)
        assert measure_last_qubit_prob(s) == pytest.approx(expected, abs=1e-12)

    @given(clause_sets(max_vars=8))
    @settings(max_examples=100, deadline=None)
    def test_statevector_and_counting_paths_agree(self, cs):
        via_state = reduced_state_from_statevector(apply_oracle(uniform_superposition(cs.num_vars), cs))
        via_count = exact_q_squared(cs)
        assert via_state.q_squared_exact == via_count.q_squared_exact
        assert via_state.r == via_count.r

    @pytest.mark.parametrize("seed", range(4))
    def test_paths_agree_on_larger_random_formulas(self, seed):
        cs = generate_random_kcnf(14, 30, 3, seed=seed)
        via_state = reduced_state_from_statevector(apply_oracle(uniform_superposition(14), cs))
        assert via_state.r == count_roots(cs)
        assert via_state.q_squared_float == pytest.approx(via_state.r / 2**14, abs=1e-12)

    def test_sampling(self):
        cs = pos_example()
        s = apply_oracle(uniform_superposition(3), cs)
        assert sample_last_qubit(s, 1000, seed=3) == sample_last_qubit(s, 1000, seed=3)
        assert 0 < sample_last_qubit(s, 1000, seed=3) < 1000
        assert sample_last_qubit(s, 0, seed=3) == 0

        unsat = ClauseSet.from_lists(1, [[1], [-1]])
        assert sample_last_qubit(apply_oracle(uniform_superposition(1), unsat), 500, seed=1) == 0

    def test_negative_shots(self):
        with pytest.raises(InputError):
            sample_last_qubit(uniform_superposition(1), -1)


class TestReducedState:
    def test_exact_q_squared(self):
        qs = exact_q_squared(pos_example())
        assert qs.q_squared_exact == Fraction(1, 8)
        assert qs.q_squared_float == 0.125
        assert qs.q == pytest.approx(0.125 ** 0.5)
        assert (qs.r, qs.n) == (1, 3)

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            ReducedQubitState(Fraction(3, 2), 1.5)

    def test_rejects_disagreeing_float(self):
        with pytest.raises(InputError):
            ReducedQubitState(Fraction(1, 8), 0.2)

    def test_density(self):
        rho = reduced_density(ReducedQubitState.from_count(1, 3))
        assert rho.p1 == Fraction(1, 8)
        assert rho.p0 == Fraction(7, 8)
        assert rho.trace() == 1
        expectation = np.trace(rho.as_matrix() @ PAULI_Z).real
        assert expectation == pytest.approx(0.75)

    def test_density_validation(self):
        with pytest.raises(InputError):
            QubitDensityMatrix(0.7, 0.7)
        with pytest.raises(InputError):
            QubitDensityMatrix(-0.1, 1.1)
