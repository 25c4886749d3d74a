"""Permutations and invertible matrices over F2."""

from typing import List, Optional, Sequence

import numpy as np

BitMatrix = np.ndarray


def gf2_matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return (a.astype(np.int64) @ b.astype(np.int64) % 2).astype(np.uint8)


def gf2_inverse(matrix: BitMatrix) -> BitMatrix:
    """Invert a square bit matrix by Gauss-Jordan elimination.

    Raises:
        ValueError: If the matrix is singular.
    """
    n = matrix.shape[0]
    work = np.concatenate([matrix.astype(np.uint8) % 2, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.nonzero(work[col:, col])[0]
        if len(pivots) == 0:
            raise ValueError("Matrix is singular over F2")
        pivot = col + pivots[0]
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        rows = np.nonzero(work[:, col])[0]
        for row in rows:
            if row != col:
                work[row] ^= work[col]
    return work[:, n:].copy()


def gf2_rank(matrix: BitMatrix) -> int:
    work = matrix.astype(np.uint8) % 2
    rank = 0
    rows, cols = work.shape
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(work[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
        for row in np.nonzero(work[:, col])[0]:
            if row != rank:
                work[row] ^= work[rank]
        rank += 1
    return rank


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


def str_to_bits(text: str) -> np.ndarray:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"Invalid bit string {text!r}")
    return np.array([1 if ch == "1" else 0 for ch in text], dtype=np.uint8)


class Permutation:
    """Bijection on wires; ``sigma[i]`` is the wire that wire ``i`` is moved to."""

    __slots__ = ("sigma",)

    def __init__(self, sigma: Sequence[int]):
        sigma = np.array(sigma, dtype=np.int64)
        if sorted(sigma.tolist()) != list(range(len(sigma))):
            raise ValueError(f"Not a permutation: {sigma.tolist()}")
        self.sigma = sigma

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n))

    @property
    def n_qubits(self) -> int:
        return len(self.sigma)

    def __call__(self, i: int) -> int:
        return int(self.sigma[i])

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.sigma, other.sigma)

    def __repr__(self) -> str:
        return f"Permutation({self.sigma.tolist()})"

    def copy(self) -> "Permutation":
        return Permutation._from_array(self.sigma.copy())

    @classmethod
    def _from_array(cls, sigma: np.ndarray) -> "Permutation":
        perm = cls.__new__(cls)
        perm.sigma = sigma
        return perm

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.sigma)
        inv[self.sigma] = np.arange(len(self.sigma))
        return Permutation._from_array(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self . other``: apply ``other`` first."""
        return Permutation._from_array(self.sigma[other.sigma])

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.sigma, np.arange(len(self.sigma))))

    def swap_left(self, i: int, j: int) -> None:
        """In place ``sigma <- (i j) . sigma``."""
        ii = self.sigma == i
        jj = self.sigma == j
        self.sigma[ii] = j
        self.sigma[jj] = i

    def swap_right(self, i: int, j: int) -> None:
        """In place ``sigma <- sigma . (i j)``."""
        self.sigma[[i, j]] = self.sigma[[j, i]]

    def to_list(self) -> List[int]:
        return [int(v) for v in self.sigma]

    def to_matrix(self) -> BitMatrix:
        n = len(self.sigma)
        matrix = np.zeros((n, n), dtype=np.uint8)
        matrix[self.sigma, np.arange(n)] = 1
        return matrix

    def to_linear_table(self) -> "LinearTable":
        return LinearTable(self.to_matrix(), self.inverse().to_matrix())

    def to_tableau(self):
        from .tableau import CliffordTableau

        return CliffordTableau.from_permutation(self)


def perm_update_swap(sigma: Permutation, i: int, j: int) -> Permutation:
    """Return ``(i j) . sigma``."""
    if i == j:
        raise ValueError("SWAP operands must differ")
    result = sigma.copy()
    result.swap_left(i, j)
    return result


class LinearTable:
    """Invertible F2 matrix ``A`` with its inverse kept in lockstep.

    ``A`` maps input parities to output wires: wire ``i`` holds ``row_i(A) . x``.
    """

    __slots__ = ("A", "A_inv")

    def __init__(self, A: BitMatrix, A_inv: Optional[BitMatrix] = None):
        A = np.asarray(A, dtype=np.uint8) % 2
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"Linear table must be square, got shape {A.shape}")
        self.A = A.copy()
        self.A_inv = gf2_inverse(A) if A_inv is None else np.asarray(A_inv, dtype=np.uint8).copy()

    @classmethod
    def identity(cls, n: int) -> "LinearTable":
        eye = np.eye(n, dtype=np.uint8)
        return cls(eye, eye.copy())

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "LinearTable":
        return cls(np.array([str_to_bits(r) for r in rows], dtype=np.uint8))

    @property
    def n_qubits(self) -> int:
        return self.A.shape[0]

    def copy(self) -> "LinearTable":
        return LinearTable(self.A, self.A_inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearTable) and np.array_equal(self.A, other.A)

    def __repr__(self) -> str:
        return f"LinearTable({self.to_rows()})"

    def is_consistent(self) -> bool:
        eye = np.eye(self.n_qubits, dtype=np.uint8)
        return bool(np.array_equal(gf2_matmul(self.A, self.A_inv), eye))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.A, np.eye(self.n_qubits, dtype=np.uint8)))

    # Left composition by incoming gates

    def cnot(self, control: int, target: int) -> None:
        """In place ``A <- E_{control,target} . A``."""
        if control == target:
            raise ValueError("CNOT operands must differ")
        self.A[target] ^= self.A[control]
        self.A_inv[:, control] ^= self.A_inv[:, target]

    def swap(self, i: int, j: int) -> None:
        """In place left composition by SWAP(i, j)."""
        self.A[[i, j]] = self.A[[j, i]]
        self.A_inv[:, [i, j]] = self.A_inv[:, [j, i]]

    # Elementary operations on either matrix

    def row_op(self, src: int, dst: int, side: str = "A") -> None:
        """XOR row ``src`` into row ``dst`` of ``A`` (or of ``A_inv``) and mirror on the other."""
        if src == dst:
            raise ValueError("Row operation needs distinct rows")
        first, second = self._sides(side)
        first[dst] ^= first[src]
        second[:, src] ^= second[:, dst]

    def col_op(self, src: int, dst: int, side: str = "A") -> None:
        """XOR column ``src`` into column ``dst`` of ``A`` (or of ``A_inv``) and mirror."""
        if src == dst:
            raise ValueError("Column operation needs distinct columns")
        first, second = self._sides(side)
        first[:, dst] ^= first[:, src]
        second[src] ^= second[dst]

    def _sides(self, side: str):
        if side == "A":
            return self.A, self.A_inv
        if side == "inverse":
            return self.A_inv, self.A
        raise ValueError(f"Unknown matrix side {side!r}")

    def append_cnot(self, control: int, target: int) -> None:
        """In place ``A <- A . E_{control,target}`` for a CNOT emitted into the output."""
        self.row_op(control, target, side="inverse")

    def to_rows(self) -> List[str]:
        return [bits_to_str(row) for row in self.A]

    def to_tableau(self):
        from .tableau import CliffordTableau

        return CliffordTableau.from_linear(self)


def linear_update_cnot(table: LinearTable, control: int, target: int) -> LinearTable:
    """Return ``E_{control,target} . A`` with the inverse kept consistent."""
    result = table.copy()
    result.cnot(control, target)
    return result


def apply_row_op(table: LinearTable, src: int, dst: int, side: str = "A") -> LinearTable:
    result = table.copy()
    result.row_op(src, dst, side)
    return result


def apply_col_op(table: LinearTable, src: int, dst: int, side: str = "A") -> LinearTable:
    result = table.copy()
    result.col_op(src, dst, side)
    return result
