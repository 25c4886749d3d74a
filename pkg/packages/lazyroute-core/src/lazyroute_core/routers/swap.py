"""SWAP insertion as lazy synthesis over wire permutations."""

from typing import List, Optional

from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import InadmissibleGateError
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.registry import routing_method

from ..f2 import Permutation
from .base import Candidate, LazyRouter


def check_swap_input(circuit: Circuit) -> None:
    for index, gate in enumerate(circuit):
        if len(gate.qubits) > 2:
            raise InadmissibleGateError(
                f"Gate {index} ({gate}) acts on more than two qubits; SWAP routing "
                f"needs one- and two-qubit gates"
            )


def meeting_candidates(path, sigma: Permutation, gate: Gate, n_qubits: int) -> List[Candidate]:
    """One candidate per edge of ``path`` where the two operands can meet.

    For a path of ``k`` vertices, meeting at edge ``(p_m, p_m+1)`` walks the first operand
    forward to ``p_m`` and the second back to ``p_m+1``; each costs ``k - 2`` SWAPs.
    """
    options = []
    for m in range(1, len(path)):
        forward = path[:m]
        backward = list(reversed(path[m:]))
        state = sigma.copy()
        gates = []
        for a, b in zip(forward, forward[1:]):
            gates.append(Gate.swap(a, b))
            state.swap_right(a, b)
        for a, b in zip(backward, backward[1:]):
            gates.append(Gate.swap(a, b))
            state.swap_right(a, b)
        gates.append(gate.relabeled(state.inverse().to_list(), n_qubits))
        options.append(Candidate(gates, state))
    return options


@routing_method("swap", validate=check_swap_input)
class PermutationRouter(LazyRouter):
    """Tracks where each logical wire sits; input SWAPs are absorbed for free."""

    def initial_state(self) -> Permutation:
        return Permutation.identity(self.n_qubits)

    def check_state(self, state) -> None:
        if not isinstance(state, Permutation) or state.n_qubits != self.n_qubits:
            raise ValueError(f"SWAP routing needs a permutation on {self.n_qubits} wires")

    def absorb(self, state: Permutation, gate: Gate) -> Optional[List[Gate]]:
        if gate.kind is GateKind.SWAP:
            state.swap_left(*gate.qubits)
            return []
        if len(gate.qubits) == 1:
            return [gate.relabeled(state.inverse().to_list(), self.n_qubits)]
        return None

    def candidates(self, state: Permutation, gate: Gate) -> List[Candidate]:
        inverse = state.inverse()
        a, b = (inverse(q) for q in gate.qubits)
        if self.graph.has_edge(a, b):
            return [Candidate([gate.relabeled(inverse.to_list(), self.n_qubits)], state.copy())]
        path = self.graph.shortest_path(a, b)
        return meeting_candidates(path, state, gate, self.n_qubits)
