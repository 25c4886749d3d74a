"""Gate vocabulary of the circuit IR."""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple, Union

from .angles import Angle, Exact, as_angle
from .paulistring import PauliString


class GateKind(Enum):
    """Supported gate kinds, valued by their OpenQASM name."""

    H = "h"
    X = "x"
    Y = "y"
    Z = "z"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    SQRT_X = "sx"
    SQRT_XDG = "sxdg"
    RZ = "rz"
    CNOT = "cx"
    SWAP = "swap"
    PAULI_ROT = "pauli_rot"

    @property
    def arity(self) -> Optional[int]:
        """Operand count, or None for Pauli rotations (support-sized)."""
        if self in (GateKind.CNOT, GateKind.SWAP):
            return 2
        if self is GateKind.PAULI_ROT:
            return None
        return 1


DIAGONAL_KINDS = frozenset(
    {GateKind.Z, GateKind.S, GateKind.SDG, GateKind.T, GateKind.TDG, GateKind.RZ}
)
CLIFFORD_KINDS = frozenset(
    {
        GateKind.H,
        GateKind.X,
        GateKind.Y,
        GateKind.Z,
        GateKind.S,
        GateKind.SDG,
        GateKind.SQRT_X,
        GateKind.SQRT_XDG,
        GateKind.CNOT,
        GateKind.SWAP,
    }
)

_INVERSES = {
    GateKind.S: GateKind.SDG,
    GateKind.SDG: GateKind.S,
    GateKind.T: GateKind.TDG,
    GateKind.TDG: GateKind.T,
    GateKind.SQRT_X: GateKind.SQRT_XDG,
    GateKind.SQRT_XDG: GateKind.SQRT_X,
}

# Diagonal phase gates expressed as Rz multiples of pi/4.
_PHASE_STEPS = {
    GateKind.T: 1,
    GateKind.TDG: -1,
    GateKind.S: 2,
    GateKind.SDG: -2,
    GateKind.Z: 4,
}

QubitMap = Union[Sequence[int], Callable[[int], int]]


@dataclass(frozen=True)
class Gate:
    """A gate applied to concrete qubits."""

    kind: GateKind
    qubits: Tuple[int, ...]
    angle: Optional[Angle] = None
    axis: Optional[PauliString] = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"Negative qubit index in {self.kind.value} {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"Repeated operand in {self.kind.value} {self.qubits}")

        if self.kind is GateKind.PAULI_ROT:
            if self.axis is None or self.angle is None:
                raise ValueError("Pauli rotation needs an axis and an angle")
            if self.axis.sign != 1:
                raise ValueError("Pauli rotation axis must carry sign +1")
            if self.qubits != self.axis.support:
                raise ValueError(
                    f"Pauli rotation operands {self.qubits} differ from axis support "
                    f"{self.axis.support}"
                )
            if not self.qubits:
                raise ValueError("Pauli rotation axis must not be the identity")
            return

        if len(self.qubits) != self.kind.arity:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.arity} operand(s), got {len(self.qubits)}"
            )
        if (self.kind is GateKind.RZ) != (self.angle is not None):
            raise ValueError(f"Only rz carries an angle, got {self.kind.value}")

    # Construction helpers

    @classmethod
    def of(cls, kind: GateKind, *qubits: int) -> "Gate":
        return cls(kind, tuple(qubits))

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls(GateKind.SWAP, (a, b))

    @classmethod
    def rz(cls, qubit: int, angle) -> "Gate":
        return cls(GateKind.RZ, (qubit,), angle=as_angle(angle))

    @classmethod
    def pauli_rot(cls, axis: PauliString, angle) -> "Gate":
        """Rotation about ``axis``; a negative axis sign is folded into the angle."""
        angle = as_angle(angle).scaled(axis.sign)
        axis = axis.unsigned()
        return cls(GateKind.PAULI_ROT, axis.support, angle=angle, axis=axis)

    # Properties

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2

    @property
    def is_diagonal(self) -> bool:
        if self.kind is GateKind.PAULI_ROT:
            return self.axis.is_diagonal()
        return self.kind in DIAGONAL_KINDS

    def is_clifford(self) -> bool:
        if self.kind in CLIFFORD_KINDS:
            return True
        if self.kind in (GateKind.RZ, GateKind.PAULI_ROT):
            return self.angle.is_clifford()
        return False

    # Transformations

    def as_rz(self) -> "Gate":
        """Rewrite T/Tdg/S/Sdg/Z as an exact Rz; other gates are returned unchanged."""
        steps = _PHASE_STEPS.get(self.kind)
        if steps is None:
            return self
        return Gate.rz(self.qubits[0], Exact(steps))

    def inverse(self) -> "Gate":
        if self.kind in _INVERSES:
            return Gate(_INVERSES[self.kind], self.qubits)
        if self.kind is GateKind.RZ:
            return Gate(GateKind.RZ, self.qubits, angle=-self.angle)
        if self.kind is GateKind.PAULI_ROT:
            return Gate(GateKind.PAULI_ROT, self.qubits, angle=-self.angle, axis=self.axis)
        return self

    def relabeled(self, mapping: QubitMap, n_qubits: Optional[int] = None) -> "Gate":
        """Move every operand ``q`` to ``mapping(q)``."""
        lookup = mapping if callable(mapping) else mapping.__getitem__
        if self.kind is GateKind.PAULI_ROT:
            size = n_qubits or self.axis.n_qubits
            chars = ["I"] * size
            for q in self.qubits:
                chars[lookup(q)] = self.axis.letters[q]
            axis = PauliString("".join(chars))
            return Gate(GateKind.PAULI_ROT, axis.support, angle=self.angle, axis=axis)
        return Gate(self.kind, tuple(lookup(q) for q in self.qubits), angle=self.angle)

    def __str__(self) -> str:
        if self.kind is GateKind.PAULI_ROT:
            return f"R_{self.axis.letters}({self.angle})"
        ops = ",".join(str(q) for q in self.qubits)
        if self.angle is not None:
            return f"{self.kind.value}({self.angle}) {ops}"
        return f"{self.kind.value} {ops}"
