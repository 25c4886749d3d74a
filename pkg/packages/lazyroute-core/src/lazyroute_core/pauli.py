"""Binary symplectic form of Pauli strings and Pauli rotations."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from lazyroute_common.angles import Angle, as_angle
from lazyroute_common.gates import Gate
from lazyroute_common.paulistring import PauliString

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}


def to_bits(p: PauliString) -> Tuple[np.ndarray, np.ndarray]:
    """X and Z bit vectors of a string; ``(1, 1)`` encodes the Hermitian letter Y."""
    x = np.fromiter((_LETTER_BITS[ch][0] for ch in p.letters), dtype=np.uint8, count=p.n_qubits)
    z = np.fromiter((_LETTER_BITS[ch][1] for ch in p.letters), dtype=np.uint8, count=p.n_qubits)
    return x, z


def from_bits(x: np.ndarray, z: np.ndarray, sign: int = 1) -> PauliString:
    letters = "".join(_BITS_LETTER[(int(a), int(b))] for a, b in zip(x, z))
    return PauliString(letters, sign)


def product_phase(x1, z1, x2, z2) -> int:
    """Exponent ``e`` with ``s(x1,z1) s(x2,z2) = i^e s(x1^x2, z1^z2)``, summed over qubits."""
    x1 = np.asarray(x1, dtype=np.int64)
    z1 = np.asarray(z1, dtype=np.int64)
    x2 = np.asarray(x2, dtype=np.int64)
    z2 = np.asarray(z2, dtype=np.int64)
    g = (
        x1 * z1 * (z2 - x2)
        + x1 * (1 - z1) * z2 * (2 * x2 - 1)
        + (1 - x1) * z1 * x2 * (1 - 2 * z2)
    )
    return int(g.sum()) % 4


@dataclass(frozen=True)
class PauliRotation:
    """``R_P(theta) = cos(theta/2) I - i sin(theta/2) P`` with an unsigned axis."""

    axis: PauliString
    angle: Angle

    def __post_init__(self):
        if self.axis.sign != 1:
            raise ValueError("Rotation axis must carry sign +1; use PauliRotation.of")
        if self.axis.is_identity():
            raise ValueError("Rotation axis must not be the identity")

    @classmethod
    def of(cls, axis: PauliString, angle) -> "PauliRotation":
        """Fold the axis sign into the angle."""
        return cls(axis.unsigned(), as_angle(angle).scaled(axis.sign))

    @classmethod
    def from_gate(cls, gate: Gate) -> "PauliRotation":
        return cls(gate.axis, gate.angle)

    @property
    def n_qubits(self) -> int:
        return self.axis.n_qubits

    @property
    def support(self) -> Tuple[int, ...]:
        return self.axis.support

    def is_clifford(self) -> bool:
        return self.angle.is_clifford()

    def commutes_with(self, other: "PauliRotation") -> bool:
        return self.axis.commutes_with(other.axis)

    def to_gate(self) -> Gate:
        return Gate.pauli_rot(self.axis, self.angle)

    def __str__(self) -> str:
        return f"R_{self.axis.letters}({self.angle})"
