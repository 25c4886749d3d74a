"""Immutable gate sequences."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Tuple, Union

from .gates import Gate, GateKind


class CountMode(Enum):
    """How two-qubit gates are counted."""

    CNOT = "cnot"  # CNOT-equivalent: SWAP = 3
    RAW = "raw"  # one per two-qubit gate


@dataclass(frozen=True)
class Circuit:
    """Ordered gates over ``n_qubits`` wires.

    Gates are listed in application order: for ``c = g1 :: g2`` the implemented operator
    is ``g2 . g1``.
    """

    n_qubits: int
    gates: Tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError(f"Circuit needs at least one qubit, got {self.n_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for index, gate in enumerate(self.gates):
            if any(q >= self.n_qubits for q in gate.qubits):
                raise ValueError(
                    f"Gate {index} ({gate}) uses a qubit outside 0..{self.n_qubits - 1}"
                )
            if gate.axis is not None and gate.axis.n_qubits != self.n_qubits:
                raise ValueError(f"Gate {index} axis width differs from circuit width")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Circuit(self.n_qubits, self.gates[index])
        return self.gates[index]

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n_qubits != self.n_qubits:
            raise ValueError("Cannot concatenate circuits of different widths")
        return Circuit(self.n_qubits, self.gates + other.gates)

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n_qubits, self.gates + tuple(gates))

    def widened(self, n_qubits: int) -> "Circuit":
        """Same gates on a register of ``n_qubits`` >= current width."""
        if n_qubits < self.n_qubits:
            raise ValueError(f"Cannot narrow a {self.n_qubits}-qubit circuit to {n_qubits}")
        if n_qubits == self.n_qubits:
            return self
        return Circuit(n_qubits, [g.relabeled(lambda q: q, n_qubits) for g in self.gates])

    def inverse(self) -> "Circuit":
        return Circuit(self.n_qubits, [g.inverse() for g in reversed(self.gates)])

    def count_cnots(self, mode: Union[CountMode, str] = CountMode.CNOT) -> int:
        """Count entangling gates.

        In CNOT mode a SWAP weighs 3 and a Pauli rotation weighs its ladder lowering,
        ``2 * (weight - 1)``. In raw mode every multi-qubit gate weighs 1.
        """
        mode = CountMode(mode)
        total = 0
        for gate in self.gates:
            if gate.kind is GateKind.CNOT:
                total += 1
            elif gate.kind is GateKind.SWAP:
                total += 3 if mode is CountMode.CNOT else 1
            elif gate.kind is GateKind.PAULI_ROT and len(gate.qubits) > 1:
                total += 2 * (len(gate.qubits) - 1) if mode is CountMode.CNOT else 1
        return total

    def count_two_qubit(self) -> int:
        return self.count_cnots(CountMode.RAW)

    def count_kind(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)


def count_cnots(circuit: Circuit, mode: Union[CountMode, str] = CountMode.CNOT) -> int:
    """Module-level alias of :meth:`Circuit.count_cnots`."""
    return circuit.count_cnots(mode)
