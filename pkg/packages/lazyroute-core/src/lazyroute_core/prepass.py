"""Rewrites of Clifford+rotation circuits ahead of Clifford routing.

``normalize`` pulls every Clifford gate to the end of the circuit, leaving a sequence of
non-Clifford Pauli rotations followed by one trailing Clifford. Merging and grouping work
on that form.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import InadmissibleGateError
from lazyroute_common.gates import CLIFFORD_KINDS, Gate, GateKind
from lazyroute_common.paulistring import PauliString

from .arch import CouplingGraph, steiner_tree
from .pauli import PauliRotation
from .tableau import CliffordTableau

logger = logging.getLogger(__name__)

CLIFFORD_INPUT_KINDS = CLIFFORD_KINDS | {
    GateKind.T,
    GateKind.TDG,
    GateKind.RZ,
    GateKind.PAULI_ROT,
}


@dataclass
class RotationSequence:
    """``U(circuit) = [trailing] . R_m ... R_1`` for ``rotations = [R_1, ..., R_m]``."""

    n_qubits: int
    rotations: List[PauliRotation] = field(default_factory=list)
    trailing: Optional[CliffordTableau] = None

    def __post_init__(self):
        if self.trailing is None:
            self.trailing = CliffordTableau.identity(self.n_qubits)

    def __len__(self) -> int:
        return len(self.rotations)

    def rotation_circuit(self) -> Circuit:
        """The rotations alone, as Pauli-rotation gates in application order."""
        return Circuit(self.n_qubits, [rot.to_gate() for rot in self.rotations])


def rotation_of(gate: Gate, n_qubits: int) -> PauliRotation:
    """The Pauli rotation an Rz or Pauli-rotation gate performs."""
    if gate.kind is GateKind.RZ:
        return PauliRotation(PauliString.single(n_qubits, gate.qubits[0], "Z"), gate.angle)
    if gate.kind is GateKind.PAULI_ROT:
        return PauliRotation.from_gate(gate)
    raise ValueError(f"Gate {gate} is not a rotation")


def check_clifford_input(circuit: Circuit) -> None:
    """Raise InadmissibleGateError on gates outside Clifford + rotations."""
    for index, gate in enumerate(circuit):
        if gate.kind not in CLIFFORD_INPUT_KINDS:
            raise InadmissibleGateError(
                f"Gate {index} ({gate}) is not admissible for Clifford routing"
            )


def normalize(circuit: Circuit, initial: Optional[CliffordTableau] = None) -> RotationSequence:
    """Pull all Clifford gates to the end.

    With ``initial`` the scan starts from that Clifford, so the result describes
    ``U(circuit) . [initial]``.
    """
    check_clifford_input(circuit)
    n = circuit.n_qubits
    tracked = initial.copy() if initial is not None else CliffordTableau.identity(n)
    rotations = []

    for gate in circuit:
        gate = gate.as_rz()
        if gate.is_clifford():
            tracked.apply_gate(gate)
            continue
        rot = rotation_of(gate, n)
        rotations.append(PauliRotation.of(tracked.conjugate(rot.axis, inverse=True), rot.angle))

    logger.debug(f"Normalized {len(circuit)} gates into {len(rotations)} rotations")
    return RotationSequence(n, rotations, tracked)


def merge_rotations(seq: RotationSequence) -> RotationSequence:
    """Merge each rotation into the latest earlier one with the same axis.

    The backward walk stops at the first anticommuting axis. A merged angle that becomes
    Clifford removes the rotation; its Clifford is pulled into the trailing operator and
    every later rotation is conjugated past it.
    """
    n = seq.n_qubits
    out: List[PauliRotation] = []
    pulled = CliffordTableau.identity(n)
    merges = 0

    for rot in seq.rotations:
        if not pulled.is_identity():
            rot = PauliRotation.of(pulled.conjugate(rot.axis, inverse=True), rot.angle)

        merged = False
        for j in range(len(out) - 1, -1, -1):
            if out[j].axis == rot.axis:
                angle = out[j].angle + rot.angle
                if angle.is_clifford():
                    del out[j]
                    if not angle.is_zero():
                        pulled.append_gate(Gate.pauli_rot(rot.axis, angle))
                else:
                    out[j] = PauliRotation(rot.axis, angle)
                merged = True
                merges += 1
                break
            if not out[j].commutes_with(rot):
                break
        if not merged:
            out.append(rot)

    logger.debug(f"Merged {merges} rotations: {len(seq)} -> {len(out)}")
    return RotationSequence(n, out, seq.trailing.compose(pulled))


def group_rotations(seq: RotationSequence) -> List[List[PauliRotation]]:
    """Greedy left-to-right split into runs of pairwise commuting rotations."""
    groups: List[List[PauliRotation]] = []
    current: List[PauliRotation] = []
    for rot in seq.rotations:
        if all(rot.commutes_with(other) for other in current):
            current.append(rot)
        else:
            groups.append(current)
            current = [rot]
    if current:
        groups.append(current)
    return groups


def steiner_cost(g: CouplingGraph, axis: PauliString) -> int:
    """Edges in the Steiner tree over the axis support."""
    return len(steiner_tree(g, axis.support).edges)


def cheapest_rotation(
    rotations: Sequence[PauliRotation],
    g: CouplingGraph,
    tableau: Optional[CliffordTableau] = None,
) -> int:
    """Index of the rotation whose current support needs the smallest tree; ties go first."""
    best, best_cost = 0, None
    for index, rot in enumerate(rotations):
        axis = rot.axis if tableau is None else tableau.conjugate(rot.axis, inverse=True)
        cost = steiner_cost(g, axis)
        if best_cost is None or cost < best_cost:
            best, best_cost = index, cost
    return best


def reorder_within_group(
    group: Sequence[PauliRotation],
    g: CouplingGraph,
    tableau: Optional[CliffordTableau] = None,
) -> List[PauliRotation]:
    """Order a commuting group cheapest first, as seen through ``tableau``."""
    remaining = list(group)
    ordered = []
    while remaining:
        ordered.append(remaining.pop(cheapest_rotation(remaining, g, tableau)))
    return ordered
