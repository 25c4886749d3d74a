"""Clifford tableaux: signed images of the Pauli generators under conjugation."""

import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import TableauError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.paulistring import PauliString

from .f2 import LinearTable, Permutation, gf2_rank
from .pauli import from_bits, product_phase, to_bits

logger = logging.getLogger(__name__)

# Rz by k quarter turns equals these gates up to global phase.
_RZ_QUARTER_TURNS = {1: GateKind.S, 2: GateKind.Z, 3: GateKind.SDG}


def _conjugate_rows(x: np.ndarray, z: np.ndarray, r: np.ndarray, gate: Gate) -> None:
    """In place ``Q <- g Q g^dagger`` for every row ``Q = (-1)^r s(x, z)``.

    Sign updates follow the Aaronson-Gottesman column rules. SqrtX is ``R_X(pi/2)``:
    it maps Z to -Y and Y to Z.
    """
    kind = gate.kind

    if kind in (GateKind.T, GateKind.TDG):
        raise TableauError(f"Gate {gate} is not Clifford")
    if kind is GateKind.RZ:
        if not gate.angle.is_clifford():
            raise TableauError(f"Gate {gate} is not Clifford")
        turns = gate.angle.quarter_turns()
        if turns == 0:
            return
        kind = _RZ_QUARTER_TURNS[turns]
    if kind is GateKind.PAULI_ROT:
        _rotate_rows(x, z, r, gate)
        return

    a = gate.qubits[0]
    xa, za = x[:, a], z[:, a]
    if kind is GateKind.H:
        r ^= xa & za
        x[:, a], z[:, a] = za.copy(), xa.copy()
    elif kind is GateKind.S:
        r ^= xa & za
        z[:, a] ^= xa
    elif kind is GateKind.SDG:
        r ^= xa & (za ^ 1)
        z[:, a] ^= xa
    elif kind is GateKind.X:
        r ^= za
    elif kind is GateKind.Y:
        r ^= xa ^ za
    elif kind is GateKind.Z:
        r ^= xa
    elif kind is GateKind.SQRT_X:
        r ^= za & (xa ^ 1)
        x[:, a] ^= za
    elif kind is GateKind.SQRT_XDG:
        r ^= za & xa
        x[:, a] ^= za
    elif kind is GateKind.CNOT:
        b = gate.qubits[1]
        xb, zb = x[:, b], z[:, b]
        r ^= xa & zb & (xb ^ za ^ 1)
        x[:, b] ^= xa
        z[:, a] ^= zb
    elif kind is GateKind.SWAP:
        b = gate.qubits[1]
        x[:, [a, b]] = x[:, [b, a]]
        z[:, [a, b]] = z[:, [b, a]]
    else:
        raise TableauError(f"Unsupported gate {gate}")


def _rotate_rows(x: np.ndarray, z: np.ndarray, r: np.ndarray, gate: Gate) -> None:
    """Conjugate rows by a Pauli rotation with a Clifford angle."""
    if not gate.angle.is_clifford():
        raise TableauError(f"Gate {gate} is not Clifford")
    turns = gate.angle.quarter_turns()
    if turns == 0:
        return
    px, pz = to_bits(gate.axis)
    anti = ((x.astype(np.int64) @ pz + z.astype(np.int64) @ px) % 2).astype(bool)
    if turns == 2:
        r[anti] ^= 1
        return
    # turns 1: Q -> -i P Q ; turns 3: Q -> i P Q
    offset = 3 if turns == 1 else 1
    for row in np.nonzero(anti)[0]:
        k = product_phase(px, pz, x[row], z[row]) + 2 * int(r[row]) + offset
        x[row] ^= px
        z[row] ^= pz
        r[row] = (k % 4) // 2


class CliffordTableau:
    """Images ``T X_i T^dagger`` (rows 0..n-1) and ``T Z_i T^dagger`` (rows n..2n-1).

    Each row is a Hermitian Pauli stored as X bits, Z bits and a sign bit.
    """

    __slots__ = ("n", "x", "z", "r")

    def __init__(self, x: np.ndarray, z: np.ndarray, r: np.ndarray):
        self.n = x.shape[1]
        self.x = x
        self.z = z
        self.r = r

    @classmethod
    def identity(cls, n: int) -> "CliffordTableau":
        eye = np.eye(n, dtype=np.uint8)
        zero = np.zeros((n, n), dtype=np.uint8)
        return cls(
            np.concatenate([eye, zero]),
            np.concatenate([zero, eye]),
            np.zeros(2 * n, dtype=np.uint8),
        )

    @classmethod
    def from_images(
        cls, x_images: Sequence[PauliString], z_images: Sequence[PauliString]
    ) -> "CliffordTableau":
        rows = list(x_images) + list(z_images)
        n = len(x_images)
        if len(z_images) != n or any(p.n_qubits != n for p in rows):
            raise TableauError("Tableau needs n X images and n Z images on n qubits")
        bits = [to_bits(p) for p in rows]
        tableau = cls(
            np.array([b[0] for b in bits], dtype=np.uint8),
            np.array([b[1] for b in bits], dtype=np.uint8),
            np.array([1 if p.sign < 0 else 0 for p in rows], dtype=np.uint8),
        )
        tableau.check()
        return tableau

    @classmethod
    def from_circuit(cls, circuit: Circuit) -> "CliffordTableau":
        tableau = cls.identity(circuit.n_qubits)
        tableau.apply_circuit(circuit)
        return tableau

    @classmethod
    def from_linear(cls, table: LinearTable) -> "CliffordTableau":
        """Tableau of ``|x> -> |A x>``: X_j -> X^(column j of A), Z_j -> Z^(row j of A^-1)."""
        n = table.n_qubits
        zero = np.zeros((n, n), dtype=np.uint8)
        return cls(
            np.concatenate([table.A.T.copy(), zero]),
            np.concatenate([zero, table.A_inv.copy()]),
            np.zeros(2 * n, dtype=np.uint8),
        )

    @classmethod
    def from_permutation(cls, perm: Permutation) -> "CliffordTableau":
        return cls.from_linear(perm.to_linear_table())

    @property
    def n_qubits(self) -> int:
        return self.n

    def copy(self) -> "CliffordTableau":
        return CliffordTableau(self.x.copy(), self.z.copy(), self.r.copy())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CliffordTableau)
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
            and np.array_equal(self.r, other.r)
        )

    def __repr__(self) -> str:
        return f"CliffordTableau({self.to_strings()})"

    # Images

    def row(self, k: int) -> PauliString:
        return from_bits(self.x[k], self.z[k], -1 if self.r[k] else 1)

    def image_x(self, i: int) -> PauliString:
        return self.row(i)

    def image_z(self, i: int) -> PauliString:
        return self.row(self.n + i)

    def to_strings(self) -> List[str]:
        return [str(self.row(k)) for k in range(2 * self.n)]

    def is_identity(self) -> bool:
        return self == CliffordTableau.identity(self.n)

    def symplectic_matrix(self) -> np.ndarray:
        return np.concatenate([self.x, self.z], axis=1)

    def check(self) -> None:
        """Raise TableauError unless the images satisfy the symplectic condition."""
        x = self.x.astype(np.int64)
        z = self.z.astype(np.int64)
        gram = (x @ z.T + z @ x.T) % 2
        n = self.n
        omega = np.zeros((2 * n, 2 * n), dtype=np.int64)
        omega[:n, n:] = np.eye(n, dtype=np.int64)
        omega[n:, :n] = np.eye(n, dtype=np.int64)
        if not np.array_equal(gram, omega):
            raise TableauError("Tableau images violate the symplectic commutation pattern")
        if gf2_rank(self.symplectic_matrix()) != 2 * n:
            raise TableauError("Tableau images are not independent")

    # Updates

    def apply_gate(self, gate: Gate) -> None:
        """In place left composition ``T <- g T``."""
        _conjugate_rows(self.x, self.z, self.r, gate)

    def append_gate(self, gate: Gate) -> None:
        """In place right composition ``T <- T g``."""
        n = self.n
        qubits = gate.qubits
        rows = list(qubits) + [n + q for q in qubits]
        m = len(rows)
        gx = np.zeros((m, n), dtype=np.uint8)
        gz = np.zeros((m, n), dtype=np.uint8)
        for i, q in enumerate(qubits):
            gx[i, q] = 1
            gz[len(qubits) + i, q] = 1
        gr = np.zeros(m, dtype=np.uint8)
        _conjugate_rows(gx, gz, gr, gate)

        images = [self._conjugate_bits(gx[i], gz[i], int(gr[i])) for i in range(m)]
        for row, (x, z, sign) in zip(rows, images):
            self.x[row] = x
            self.z[row] = z
            self.r[row] = 0 if sign > 0 else 1

    def update(self, gate: Gate, side: str = "left") -> None:
        if side == "left":
            self.apply_gate(gate)
        elif side == "right":
            self.append_gate(gate)
        else:
            raise ValueError(f"Unknown update side {side!r}")

    def apply_circuit(self, circuit: Iterable[Gate]) -> None:
        for gate in circuit:
            self.apply_gate(gate)

    # Conjugation

    def _conjugate_bits(self, px: np.ndarray, pz: np.ndarray, sign_bit: int):
        """Forward conjugation of ``(-1)^sign_bit s(px, pz)``; returns ``(x, z, sign)``."""
        n = self.n
        acc_x = np.zeros(n, dtype=np.uint8)
        acc_z = np.zeros(n, dtype=np.uint8)
        k = 2 * sign_bit + int(np.sum(px & pz))
        factors = [j for j in range(n) if px[j]], [n + j for j in range(n) if pz[j]]
        # s(x, z) = i^(x.z) X^x Z^z per qubit, so X factors of qubit j precede its Z factor.
        order = sorted(factors[0] + factors[1], key=lambda row: (row % n, row >= n))
        for row in order:
            k += 2 * int(self.r[row]) + product_phase(acc_x, acc_z, self.x[row], self.z[row])
            acc_x ^= self.x[row]
            acc_z ^= self.z[row]
        k %= 4
        if k % 2:
            raise TableauError("Conjugation produced a non-Hermitian Pauli")
        return acc_x, acc_z, 1 if k == 0 else -1

    def conjugate(self, p: PauliString, inverse: bool = False) -> PauliString:
        """``T P T^dagger`` (forward) or ``T^dagger P T`` (inverse), sign included."""
        if p.n_qubits != self.n:
            raise ValueError(f"Pauli string on {p.n_qubits} qubits, tableau on {self.n}")
        px, pz = to_bits(p)
        sign_bit = 1 if p.sign < 0 else 0
        if not inverse:
            x, z, sign = self._conjugate_bits(px, pz, sign_bit)
            return from_bits(x, z, sign)

        ux, uz = self._preimage_bits(px, pz)
        x, z, sign = self._conjugate_bits(ux, uz, 0)
        if not (np.array_equal(x, px) and np.array_equal(z, pz)):
            raise TableauError("Inverse conjugation failed; tableau is not symplectic")
        # T s(u) T^dagger = sign * |P|, hence T^dagger P T = p.sign * sign * s(u).
        return from_bits(ux, uz, sign * p.sign)

    def _preimage_bits(self, px: np.ndarray, pz: np.ndarray):
        """Unsigned bits of ``T^dagger P T`` from the symplectic inverse ``Omega M^T Omega``."""
        n = self.n
        w = (self.x.astype(np.int64) @ pz + self.z.astype(np.int64) @ px) % 2
        ux = w[n:].astype(np.uint8)
        uz = w[:n].astype(np.uint8)
        return ux, uz

    def inverse(self) -> "CliffordTableau":
        n = self.n
        x = np.zeros((2 * n, n), dtype=np.uint8)
        z = np.zeros((2 * n, n), dtype=np.uint8)
        r = np.zeros(2 * n, dtype=np.uint8)
        for k in range(2 * n):
            gx = np.zeros(n, dtype=np.uint8)
            gz = np.zeros(n, dtype=np.uint8)
            if k < n:
                gx[k] = 1
            else:
                gz[k - n] = 1
            ux, uz = self._preimage_bits(gx, gz)
            _, _, sign = self._conjugate_bits(ux, uz, 0)
            x[k], z[k], r[k] = ux, uz, 0 if sign > 0 else 1
        return CliffordTableau(x, z, r)

    def compose(self, other: "CliffordTableau") -> "CliffordTableau":
        """Tableau of ``[self] . [other]`` (``other`` acts first)."""
        if other.n != self.n:
            raise ValueError("Cannot compose tableaux of different widths")
        result = other.copy()
        for k in range(2 * self.n):
            x, z, sign = self._conjugate_bits(other.x[k], other.z[k], int(other.r[k]))
            result.x[k], result.z[k], result.r[k] = x, z, 0 if sign > 0 else 1
        return result


def tableau_update(t: CliffordTableau, gate: Gate, side: str = "left") -> CliffordTableau:
    """Return a copy of ``t`` composed with ``gate`` on the given side."""
    result = t.copy()
    result.update(gate, side)
    return result


def conjugate_pauli(t: CliffordTableau, p: PauliString, direction: str = "forward") -> PauliString:
    if direction not in ("forward", "inverse"):
        raise ValueError(f"Unknown conjugation direction {direction!r}")
    return t.conjugate(p, inverse=direction == "inverse")


def tableau_invert(t: CliffordTableau) -> CliffordTableau:
    return t.inverse()


def compose(a: CliffordTableau, b: Optional[CliffordTableau]) -> CliffordTableau:
    return a.copy() if b is None else a.compose(b)
