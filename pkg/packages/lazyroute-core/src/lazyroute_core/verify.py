"""Dense and F2 oracles: unitaries, equivalence up to a final operator, compliance.

Basis states are indexed with qubit 0 as the most significant bit.
"""

import logging
from math import cos, pi, sin, sqrt
from typing import List, Optional, Tuple, Union

import numpy as np
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import VerificationError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.paulistring import PauliString

from .arch import CouplingGraph
from .config import default_dense_cap
from .f2 import LinearTable, Permutation
from .pauli import to_bits
from .tableau import CliffordTableau

logger = logging.getLogger(__name__)

Tracker = Union[Permutation, LinearTable, CliffordTableau]

_SQRT2_INV = 1 / sqrt(2)
_T_PHASE = np.exp(1j * pi / 4)

GATE_1Q = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, _T_PHASE]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, np.conj(_T_PHASE)]], dtype=complex),
    # OpenQASM sx convention: e^{i pi/4} R_X(pi/2)
    GateKind.SQRT_X: np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2,
    GateKind.SQRT_XDG: np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]], dtype=complex) / 2,
}

GATE_2Q = {
    GateKind.CNOT: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ).reshape(2, 2, 2, 2),
    GateKind.SWAP: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ).reshape(2, 2, 2, 2),
}


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def _check_width(n: int, cap: Optional[int]) -> None:
    cap = default_dense_cap() if cap is None else cap
    if n > cap:
        raise VerificationError(f"Width {n} exceeds the dense verification cap {cap}")


def _basis_bits(n: int) -> np.ndarray:
    """Row ``b`` holds the bits of basis index ``b``, qubit 0 first."""
    idx = np.arange(2**n)
    return ((idx[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1).astype(np.uint8)


def _bits_to_index(bits: np.ndarray) -> np.ndarray:
    n = bits.shape[-1]
    weights = 1 << (n - 1 - np.arange(n))
    return bits.astype(np.int64) @ weights


def pauli_matrix(p: PauliString) -> np.ndarray:
    letters = {"I": np.eye(2, dtype=complex), "X": GATE_1Q[GateKind.X],
               "Y": GATE_1Q[GateKind.Y], "Z": GATE_1Q[GateKind.Z]}  # fmt: skip
    matrix = np.array([[1.0]], dtype=complex)
    for ch in p.letters:
        matrix = np.kron(matrix, letters[ch])
    return p.sign * matrix


def apply_pauli(p: PauliString, state: np.ndarray) -> np.ndarray:
    """``P |psi>`` using ``P|b> = i^{#Y} (-1)^{z.b} |b ^ x>``; works on vectors or matrices."""
    n = p.n_qubits
    x, z = to_bits(p)
    idx = np.arange(2**n)
    xmask = int(_bits_to_index(x))
    zmask = int(_bits_to_index(z))
    parity = np.zeros(2**n, dtype=np.int64)
    masked = idx & zmask
    while masked.any():
        parity ^= masked & 1
        masked = masked >> 1
    phase = p.sign * (1j ** int(np.sum(x & z))) * (1 - 2 * parity)
    out = np.empty_like(state)
    if state.ndim == 1:
        out[idx ^ xmask] = phase * state
    else:
        out[idx ^ xmask] = phase[:, None] * state
    return out


def pauli_rotation_matrix(p: PauliString, theta: float) -> np.ndarray:
    dim = 2**p.n_qubits
    return cos(theta / 2) * np.eye(dim, dtype=complex) - 1j * sin(theta / 2) * pauli_matrix(p)


def _apply_gate(state: np.ndarray, gate: Gate, n: int) -> np.ndarray:
    """Apply one gate to a ``(2**n, m)`` array of column states."""
    if gate.kind is GateKind.PAULI_ROT:
        theta = gate.angle.radians
        return cos(theta / 2) * state - 1j * sin(theta / 2) * apply_pauli(gate.axis, state)

    m = state.shape[1]
    tensor = state.reshape([2] * n + [m])
    if gate.kind is GateKind.RZ:
        matrix = rz_matrix(gate.angle.radians)
    else:
        matrix = GATE_1Q.get(gate.kind)

    if matrix is not None:
        (q,) = gate.qubits
        tensor = np.moveaxis(np.tensordot(matrix, tensor, axes=([1], [q])), 0, q)
    else:
        q0, q1 = gate.qubits
        tensor = np.tensordot(GATE_2Q[gate.kind], tensor, axes=([2, 3], [q0, q1]))
        tensor = np.moveaxis(tensor, [0, 1], [q0, q1])
    return tensor.reshape(2**n, m)


def dense_unitary(circuit: Circuit, cap: Optional[int] = None) -> np.ndarray:
    """Unitary of a circuit; gates act in list order."""
    n = circuit.n_qubits
    _check_width(n, cap)
    state = np.eye(2**n, dtype=complex)
    for gate in circuit:
        state = _apply_gate(state, gate, n)
    return state


def simulate_statevector(circuit: Circuit, cap: Optional[int] = None) -> np.ndarray:
    """Output state of the circuit on ``|0...0>``."""
    n = circuit.n_qubits
    _check_width(n, cap)
    state = np.zeros((2**n, 1), dtype=complex)
    state[0, 0] = 1.0
    for gate in circuit:
        state = _apply_gate(state, gate, n)
    return state[:, 0]


def linear_unitary(table: LinearTable) -> np.ndarray:
    """Permutation matrix of ``|x> -> |A x>``."""
    n = table.n_qubits
    bits = _basis_bits(n)
    images = (bits.astype(np.int64) @ table.A.T.astype(np.int64)) % 2
    matrix = np.zeros((2**n, 2**n), dtype=complex)
    matrix[_bits_to_index(images), np.arange(2**n)] = 1.0
    return matrix


def tableau_unitary(tableau: CliffordTableau) -> np.ndarray:
    """A unitary (up to global phase) acting on Paulis as the tableau does.

    Projects a fixed random vector onto the state stabilized by the Z images, then
    builds column ``x`` by applying the X images selected by the bits of ``x``.
    """
    n = tableau.n_qubits
    dim = 2**n
    rng = np.random.default_rng(7)
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    for i in range(n):
        psi = 0.5 * (psi + apply_pauli(tableau.image_z(i), psi))
    norm = np.linalg.norm(psi)
    if norm < 1e-9:
        raise VerificationError("Stabilizer projection vanished; tableau is inconsistent")
    psi /= norm

    matrix = np.zeros((dim, dim), dtype=complex)
    bits = _basis_bits(n)
    for col in range(dim):
        column = psi
        for i in range(n):
            if bits[col, i]:
                column = apply_pauli(tableau.image_x(i), column)
        matrix[:, col] = column
    return matrix


def tracker_unitary(tracker: Tracker, cap: Optional[int] = None) -> np.ndarray:
    _check_width(tracker.n_qubits, cap)
    if isinstance(tracker, Permutation):
        return linear_unitary(tracker.to_linear_table())
    if isinstance(tracker, LinearTable):
        return linear_unitary(tracker)
    if isinstance(tracker, CliffordTableau):
        return tableau_unitary(tracker)
    raise TypeError(f"Unknown tracker type {type(tracker).__name__}")


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """Whether ``a = e^{i phi} b`` for a single phase, normalized on the first nonzero entry."""
    if a.shape != b.shape:
        return False
    flat_b = b.reshape(-1)
    nonzero = np.nonzero(np.abs(flat_b) > 1e-6)[0]
    if len(nonzero) == 0:
        return bool(np.max(np.abs(a)) < tol)
    k = nonzero[0]
    if abs(a.reshape(-1)[k]) < 1e-12:
        return False
    phase = flat_b[k] / a.reshape(-1)[k]
    if abs(abs(phase) - 1) > 1e-6:
        return False
    return bool(np.max(np.abs(a * phase - b)) < tol)


def equivalent_up_to(
    h: Optional[Tracker],
    c_in: Circuit,
    c_out: Circuit,
    tol: float = 1e-9,
    cap: Optional[int] = None,
) -> bool:
    """Check ``[h] . U(c_out) = U(c_in)`` up to a global phase."""
    if c_in.n_qubits != c_out.n_qubits or (h is not None and h.n_qubits != c_out.n_qubits):
        raise VerificationError(
            f"Width mismatch: input {c_in.n_qubits}, output {c_out.n_qubits}"
            + (f", final operator {h.n_qubits}" if h is not None else "")
        )
    expected = dense_unitary(c_in, cap)
    actual = dense_unitary(c_out, cap)
    if h is not None:
        actual = tracker_unitary(h, cap) @ actual
    result = equal_up_to_phase(actual, expected, tol)
    logger.debug(f"Dense equivalence on {c_in.n_qubits} qubits: {result}")
    return result


def f2_simulate(circuit: Circuit) -> np.ndarray:
    """Row-parity matrix of a CNOT/SWAP circuit."""
    table = LinearTable.identity(circuit.n_qubits)
    for index, gate in enumerate(circuit):
        if gate.kind is GateKind.CNOT:
            table.cnot(*gate.qubits)
        elif gate.kind is GateKind.SWAP:
            table.swap(*gate.qubits)
        else:
            raise ValueError(f"Gate {index} ({gate}) is not linear reversible")
    return table.A


def check_compliance(circuit: Circuit, g: CouplingGraph) -> List[Tuple[int, Gate]]:
    """Every multi-qubit gate that does not sit on a coupling edge, with its index."""
    violations = []
    for index, gate in enumerate(circuit):
        if any(q >= g.n_vertices for q in gate.qubits):
            violations.append((index, gate))
        elif len(gate.qubits) == 2 and not g.has_edge(*gate.qubits):
            violations.append((index, gate))
        elif len(gate.qubits) > 2:
            violations.append((index, gate))
    return violations


def measurement_distribution(state: np.ndarray) -> np.ndarray:
    probs = np.abs(state) ** 2
    return probs / probs.sum()


def expectation(state: np.ndarray, p: PauliString) -> float:
    return float(np.real(np.vdot(state, apply_pauli(p, state))))
