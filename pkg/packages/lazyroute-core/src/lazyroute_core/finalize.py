"""Handling the residual final operator: observables and bit-string sampling.

A routed circuit differs from its input by the final operator ``A``. Expectation values
use the conjugated observable ``A^dagger H A``. Samples either go through a classical
affine map (linear and permutation operators) or need a Clifford ``c_diag`` appended
before measurement, followed by the affine map.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import TableauError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.models import AffineFixModel
from lazyroute_common.paulistring import PauliString

from .arch import CouplingGraph
from .f2 import (
    LinearTable,
    Permutation,
    bits_to_str,
    gf2_inverse,
    gf2_matmul,
    gf2_rank,
    str_to_bits,
)
from .pauli import to_bits
from .tableau import CliffordTableau
from .verify import expectation, pauli_matrix

logger = logging.getLogger(__name__)

Tracker = Union[Permutation, LinearTable, CliffordTableau]
Bits = Union[str, np.ndarray]


def as_tableau(h: Tracker) -> CliffordTableau:
    if isinstance(h, CliffordTableau):
        return h
    return h.to_tableau()


@dataclass
class Observable:
    """Real combination of Pauli strings; equal strings merge, signs move into coefficients."""

    terms: List[Tuple[float, PauliString]]

    def __post_init__(self):
        merged: Dict[str, float] = {}
        widths = set()
        for coefficient, pauli in self.terms:
            widths.add(pauli.n_qubits)
            key = pauli.letters
            merged[key] = merged.get(key, 0.0) + pauli.sign * float(coefficient)
        if len(widths) > 1:
            raise ValueError(f"Observable terms act on different widths: {sorted(widths)}")
        self.terms = [(c, PauliString(letters)) for letters, c in merged.items()]

    @classmethod
    def parse(cls, text: str) -> "Observable":
        """Parse ``"0.5 ZZI + -1 XIX"``: ``+``-separated ``coefficient string`` pairs."""
        terms = []
        for chunk in text.split("+"):
            fields = chunk.split()
            if not fields:
                continue
            if len(fields) != 2:
                raise ValueError(f"Malformed observable term {chunk.strip()!r}")
            terms.append((float(fields[0]), PauliString.parse(fields[1])))
        return cls(terms)

    @property
    def n_qubits(self) -> int:
        return self.terms[0][1].n_qubits if self.terms else 0

    def __len__(self) -> int:
        return len(self.terms)

    def matrix(self) -> np.ndarray:
        return sum(c * pauli_matrix(p) for c, p in self.terms)

    def expectation(self, state: np.ndarray) -> float:
        return sum(c * expectation(state, p) for c, p in self.terms)


@dataclass
class AffineFix:
    """Bit-string map ``w -> L w + b`` over F2; bit ``i`` belongs to qubit ``i``."""

    L: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        self.L = np.asarray(self.L, dtype=np.uint8) % 2
        self.b = np.asarray(self.b, dtype=np.uint8) % 2
        n = self.L.shape[0]
        if self.L.shape != (n, n) or self.b.shape != (n,):
            raise ValueError(f"Affine fix needs an n x n matrix and n bits, got {self.L.shape}")

    @classmethod
    def identity(cls, n: int) -> "AffineFix":
        return cls(np.eye(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @property
    def n_qubits(self) -> int:
        return self.L.shape[0]

    def is_invertible(self) -> bool:
        return gf2_rank(self.L) == self.n_qubits

    def apply(self, w: Bits) -> Bits:
        return apply_fix(self, w)

    def to_model(self) -> AffineFixModel:
        return AffineFixModel(L=[bits_to_str(row) for row in self.L], b=bits_to_str(self.b))


def conjugate_observable(h: Tracker, obs: Observable) -> Observable:
    """``A^dagger H A`` term by term, sign folded into each coefficient."""
    tableau = as_tableau(h)
    terms = []
    for coefficient, pauli in obs.terms:
        image = tableau.conjugate(pauli, inverse=True)
        terms.append((coefficient * image.sign, image.unsigned()))
    return Observable(terms)


def linear_fix(h: Union[Permutation, LinearTable]) -> AffineFix:
    """Classical fix for permutation and linear operators: measured ``w`` stands for ``A w``."""
    table = h.to_linear_table() if isinstance(h, Permutation) else h
    return AffineFix(table.A.copy(), np.zeros(table.n_qubits, dtype=np.uint8))


def _cancel_hadamard_pairs(gates: List[Gate]) -> List[Gate]:
    """Drop H pairs on a qubit with nothing in between on that qubit."""
    out: List[Gate] = []
    last_on: Dict[int, int] = {}
    for gate in gates:
        if gate.kind is GateKind.H:
            (q,) = gate.qubits
            prev = last_on.get(q)
            if prev is not None and out[prev] is not None and out[prev].kind is GateKind.H:
                out[prev] = None
                del last_on[q]
                continue
        out.append(gate)
        for q in gate.qubits:
            last_on[q] = len(out) - 1
    return [g for g in out if g is not None]


def codiagonalize(paulis: List[PauliString]) -> Circuit:
    """Clifford circuit sending ``n`` independent commuting strings to strings over ``{I, Z}``.

    Hadamards on the non-pivot columns of the X block make it invertible; row reduction
    then leaves a symmetric Z block, cleared with S and CZ before a final Hadamard layer.
    """
    n = len(paulis)
    bits = [to_bits(p) for p in paulis]
    x = np.array([b[0] for b in bits], dtype=np.uint8)
    z = np.array([b[1] for b in bits], dtype=np.uint8)
    gates: List[Gate] = []

    if not x.any():
        return Circuit(n)

    def hadamard(j):
        gates.append(Gate.of(GateKind.H, j))
        x[:, j], z[:, j] = z[:, j].copy(), x[:, j].copy()

    pivots = _pivot_columns(x)
    for j in range(n):
        if j not in pivots:
            hadamard(j)

    reduce = gf2_inverse(x)
    x = gf2_matmul(reduce, x)
    z = gf2_matmul(reduce, z)
    if not np.array_equal(z, z.T):
        raise TableauError("Co-diagonalization inputs do not commute")

    for i in range(n):
        if z[i, i]:
            gates.append(Gate.of(GateKind.S, i))
            z[:, i] ^= x[:, i]
    for i in range(n):
        for j in range(i + 1, n):
            if z[i, j]:
                gates.extend([Gate.of(GateKind.H, j), Gate.cnot(i, j), Gate.of(GateKind.H, j)])
                z[:, i] ^= x[:, j]
                z[:, j] ^= x[:, i]
    for j in range(n):
        hadamard(j)

    return Circuit(n, _cancel_hadamard_pairs(gates))


def _pivot_columns(x: np.ndarray) -> set:
    work = x.copy()
    rows, cols = work.shape
    pivots = set()
    rank = 0
    for col in range(cols):
        hits = np.nonzero(work[rank:, col])[0]
        if len(hits) == 0:
            continue
        pivot = rank + hits[0]
        work[[rank, pivot]] = work[[pivot, rank]]
        for row in np.nonzero(work[:, col])[0]:
            if row != rank:
                work[row] ^= work[rank]
        pivots.add(col)
        rank += 1
        if rank == rows:
            break
    return pivots


def sampling_fix(
    h: Tracker, graph: Optional[CouplingGraph] = None, depth: int = 0
) -> Tuple[Circuit, AffineFix]:
    """Circuit to append before measurement and the affine map to apply to its samples.

    With ``graph`` the co-diagonalizing circuit is routed with the linear router and the
    router's residual linear operator is folded into ``L``.

    Raises:
        TableauError: If the measured strings do not commute.
    """
    tableau = as_tableau(h)
    n = tableau.n_qubits
    measured = [tableau.conjugate(PauliString.single(n, i, "Z"), inverse=True) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not measured[i].commutes_with(measured[j]):
                raise TableauError(
                    f"Measured strings {measured[i]} and {measured[j]} anticommute"
                )

    c_diag = codiagonalize(measured)
    diag = CliffordTableau.from_circuit(c_diag)
    L = np.zeros((n, n), dtype=np.uint8)
    b = np.zeros(n, dtype=np.uint8)
    for i, pauli in enumerate(measured):
        image = diag.conjugate(pauli)
        x, z = to_bits(image)
        if x.any():
            raise TableauError(f"Co-diagonalization left {image} non-diagonal")
        L[i] = z
        b[i] = 1 if image.sign < 0 else 0

    if graph is not None:
        from .routers import route

        routed = route(c_diag, graph, "linear", depth=depth)
        c_diag = routed.circuit
        L = gf2_matmul(L, routed.final_operator.A)

    fix = AffineFix(L, b)
    logger.debug(f"Sampling fix on {n} qubits: {len(c_diag)} gates in c_diag")
    return c_diag, fix


def apply_fix(fix: AffineFix, w: Bits) -> Bits:
    """``L w + b``; strings come back as strings, arrays as arrays.

    Raises:
        ValueError: If ``w`` has the wrong length.
    """
    as_text = isinstance(w, str)
    bits = str_to_bits(w) if as_text else np.asarray(w, dtype=np.uint8)
    if bits.shape != (fix.n_qubits,):
        raise ValueError(f"Bit string of length {bits.shape[0]} for a {fix.n_qubits}-bit fix")
    out = (gf2_matmul(fix.L, bits.reshape(-1, 1)).reshape(-1) ^ fix.b).astype(np.uint8)
    return bits_to_str(out) if as_text else out


def fix_samples(fix: AffineFix, samples: Iterable[str]) -> List[str]:
    return [apply_fix(fix, w) for w in samples]
