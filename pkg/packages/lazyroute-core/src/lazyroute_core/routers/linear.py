"""Lazy synthesis over linear reversible (CNOT + SWAP) operators."""

from typing import List, Optional

import numpy as np
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import InadmissibleGateError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.registry import routing_method

from ..f2 import LinearTable
from ..synth import fan_in, fan_out
from .base import Candidate, LazyRouter


def check_linear_input(circuit: Circuit) -> None:
    for index, gate in enumerate(circuit):
        if len(gate.qubits) == 2 and gate.kind not in (GateKind.CNOT, GateKind.SWAP):
            raise InadmissibleGateError(
                f"Gate {index} ({gate}) is not admissible for linear routing; "
                f"two-qubit gates must be cx or swap"
            )
        if len(gate.qubits) > 2:
            raise InadmissibleGateError(f"Gate {index} ({gate}) acts on more than two qubits")


@routing_method("linear", validate=check_linear_input)
class LinearRouter(LazyRouter):
    """Absorbs CNOT and SWAP into an F2 table; single-qubit gates force extraction.

    Extracting a gate on ``q`` folds row ``q`` of ``A`` onto one of its support qubits
    ``q'`` with a fan-in. Non-diagonal gates also need column ``q`` of ``A^-1`` reduced
    to ``e_q'``, done by a fan-out. The gate is then emitted on ``q'``.
    """

    def initial_state(self) -> LinearTable:
        return LinearTable.identity(self.n_qubits)

    def check_state(self, state) -> None:
        if not isinstance(state, LinearTable) or state.n_qubits != self.n_qubits:
            raise ValueError(f"Linear routing needs a linear table on {self.n_qubits} wires")

    def absorb(self, state: LinearTable, gate: Gate) -> Optional[List[Gate]]:
        if gate.kind is GateKind.CNOT:
            state.cnot(*gate.qubits)
            return []
        if gate.kind is GateKind.SWAP:
            state.swap(*gate.qubits)
            return []
        return None

    def candidates(self, state: LinearTable, gate: Gate) -> List[Candidate]:
        (q,) = gate.qubits
        support = [int(v) for v in np.nonzero(state.A[q])[0]]
        tree = self.graph.steiner_tree(support)
        return [self.extract_at(state, gate, tree, root) for root in support]

    def extract_at(self, state: LinearTable, gate: Gate, tree, root: int) -> Candidate:
        """Fold row ``q`` onto ``root`` and, for non-diagonal gates, clear column ``q``."""
        (q,) = gate.qubits
        n = self.n_qubits
        table = state.copy()
        gates: List[Gate] = []

        for cnot in fan_in(tree, tree.terminals, root, n_qubits=n):
            table.append_cnot(*cnot.qubits)
            gates.append(cnot)

        if not gate.is_diagonal:
            targets = [int(r) for r in np.nonzero(table.A_inv[:, q])[0] if r != root]
            if targets:
                spread = self.graph.steiner_tree([root] + targets)
                for cnot in fan_out(spread, targets, root, n_qubits=n):
                    table.append_cnot(*cnot.qubits)
                    gates.append(cnot)

        gates.append(gate.relabeled({q: root}.__getitem__, n))
        return Candidate(gates, table)
