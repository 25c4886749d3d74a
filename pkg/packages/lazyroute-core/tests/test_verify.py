"""Tests for the dense and F2 oracles."""

import numpy as np
import pytest
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import VerificationError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.paulistring import PauliString
from lazyroute_core.f2 import LinearTable, Permutation
from lazyroute_core.verify import (
    check_compliance,
    dense_unitary,
    equal_up_to_phase,
    equivalent_up_to,
    expectation,
    pauli_rotation_matrix,
    simulate_statevector,
    tracker_unitary,
)


class TestDense:
    """Test dense simulation conventions."""

    def test_qubit_zero_is_most_significant(self):
        """X on qubit 0 of two flips the high bit."""
        state = simulate_statevector(Circuit(2, [Gate.of(GateKind.X, 0)]))
        assert np.argmax(np.abs(state)) == 2

    def test_cnot_direction(self):
        """CNOT(0, 1) maps |10> to |11>."""
        state = simulate_statevector(Circuit(2, [Gate.of(GateKind.X, 0), Gate.cnot(0, 1)]))
        assert np.argmax(np.abs(state)) == 3

    def test_sqrt_x_squares_to_x(self):
        """Two SqrtX gates make an X."""
        circuit = Circuit(1, [Gate.of(GateKind.SQRT_X, 0)] * 2)
        x_gate = Circuit(1, [Gate.of(GateKind.X, 0)])
        assert np.allclose(dense_unitary(circuit), dense_unitary(x_gate))

    def test_pauli_rotation_gate(self):
        """Pauli-rotation gates match the closed-form matrix."""
        axis = PauliString("XZY")
        circuit = Circuit(3, [Gate.pauli_rot(axis, 0.9)])
        assert np.allclose(dense_unitary(circuit), pauli_rotation_matrix(axis, 0.9))

    def test_expectation(self):
        """<+|X|+> is one."""
        state = simulate_statevector(Circuit(1, [Gate.of(GateKind.H, 0)]))
        assert expectation(state, PauliString("X")) == pytest.approx(1.0)

    def test_width_cap(self):
        """Dense simulation refuses registers above the cap."""
        with pytest.raises(VerificationError, match="exceeds the dense verification cap"):
            dense_unitary(Circuit(4), cap=3)

    def test_phase_equality(self):
        """Global phases are ignored, relative phases are not."""
        u = dense_unitary(Circuit(1, [Gate.of(GateKind.S, 0)]))
        assert equal_up_to_phase(np.exp(0.3j) * u, u)
        assert not equal_up_to_phase(dense_unitary(Circuit(1, [Gate.of(GateKind.Z, 0)])), u)


class TestEquivalence:
    """Test the routing-invariant oracle."""

    def test_trackers(self):
        """Permutation and linear trackers account for the missing gates."""
        c_in = Circuit(3, [Gate.of(GateKind.H, 0), Gate.swap(0, 2)])
        c_out = Circuit(3, [Gate.of(GateKind.H, 0)])
        sigma = Permutation([2, 1, 0])
        assert equivalent_up_to(sigma, c_in, c_out)
        assert equivalent_up_to(sigma.to_linear_table(), c_in, c_out)
        assert not equivalent_up_to(None, c_in, c_out)

    def test_linear_tracker_unitary(self):
        """Linear tables act as basis permutations."""
        table = LinearTable.identity(2)
        table.cnot(0, 1)
        assert np.allclose(tracker_unitary(table), dense_unitary(Circuit(2, [Gate.cnot(0, 1)])))

    def test_width_mismatch(self):
        """Input, output and tracker widths must agree."""
        with pytest.raises(VerificationError, match="Width mismatch"):
            equivalent_up_to(None, Circuit(2), Circuit(3))


class TestCompliance:
    """Test the coupling check."""

    def test_violations_listed(self, lnn6):
        """Gates off the coupling graph are reported with their index."""
        circuit = Circuit(
            6,
            [
                Gate.cnot(0, 1),
                Gate.cnot(0, 2),
                Gate.of(GateKind.H, 5),
                Gate.pauli_rot(PauliString("XXXIII"), 0.2),
                Gate.swap(4, 5),
            ],
        )
        violations = check_compliance(circuit, lnn6)
        assert [index for index, _ in violations] == [1, 3]
