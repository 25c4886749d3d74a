"""Hermitian Pauli strings over n qubits."""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

PAULI_LETTERS = "IXYZ"

_PAULI_RE = re.compile(r"^([+-]?)([IXYZ]+)$")


@dataclass(frozen=True)
class PauliString:
    """A signed tensor product of single-qubit Paulis.

    ``letters[i]`` acts on qubit ``i`` (qubit 0 leftmost in the text form). Only the
    Hermitian signs +1 and -1 are representable.
    """

    letters: str
    sign: int = 1

    def __post_init__(self):
        if not self.letters:
            raise ValueError("Pauli string must act on at least one qubit")
        if any(ch not in PAULI_LETTERS for ch in self.letters):
            raise ValueError(f"Invalid Pauli letters: {self.letters!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"Pauli string sign must be +1 or -1, got {self.sign}")

    @classmethod
    def parse(cls, text: str) -> "PauliString":
        """Parse the textual form, e.g. ``-IXYZ``."""
        match = _PAULI_RE.match(text.strip())
        if not match:
            raise ValueError(f"Invalid Pauli string: {text!r}")
        return cls(match.group(2), -1 if match.group(1) == "-" else 1)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls("I" * n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        """Pauli acting as ``letter`` on one qubit and identity elsewhere."""
        return cls.from_sparse(n, {qubit: letter})

    @classmethod
    def from_sparse(cls, n: int, letters: Dict[int, str], sign: int = 1) -> "PauliString":
        chars = ["I"] * n
        for qubit, letter in letters.items():
            if not 0 <= qubit < n:
                raise ValueError(f"Qubit {qubit} out of range for {n} qubits")
            chars[qubit] = letter
        return cls("".join(chars), sign)

    @property
    def n_qubits(self) -> int:
        return len(self.letters)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, ch in enumerate(self.letters) if ch != "I")

    @property
    def weight(self) -> int:
        return len(self.support)

    def is_identity(self) -> bool:
        return not self.support

    def is_diagonal(self) -> bool:
        return all(ch in "IZ" for ch in self.letters)

    def unsigned(self) -> "PauliString":
        return self if self.sign == 1 else PauliString(self.letters)

    def with_sign(self, sign: int) -> "PauliString":
        return PauliString(self.letters, sign)

    def __neg__(self) -> "PauliString":
        return PauliString(self.letters, -self.sign)

    def commutes_with(self, other: "PauliString") -> bool:
        """Two strings commute iff they differ on an even number of shared supports."""
        if self.n_qubits != other.n_qubits:
            raise ValueError("Pauli strings act on different numbers of qubits")
        clashes = sum(
            1 for a, b in zip(self.letters, other.letters) if a != "I" and b != "I" and a != b
        )
        return clashes % 2 == 0

    def restricted(self, qubits: Iterable[int]) -> str:
        """Letters on the given qubits, in order."""
        return "".join(self.letters[q] for q in qubits)

    def permuted(self, mapping) -> "PauliString":
        """Move the letter on qubit ``i`` to qubit ``mapping[i]``."""
        chars = ["I"] * self.n_qubits
        for i, ch in enumerate(self.letters):
            chars[mapping[i]] = ch
        return PauliString("".join(chars), self.sign)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "+") + self.letters
