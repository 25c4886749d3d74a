"""Lazy synthesis over Clifford operators: only non-Clifford rotations are emitted."""

from typing import List, Optional, Tuple, Union

from lazyroute_common.circuit import Circuit, CountMode
from lazyroute_common.errors import TableauError
from lazyroute_common.gates import Gate
from lazyroute_common.registry import routing_method

from ..arch import CouplingGraph
from ..prepass import (
    check_clifford_input,
    cheapest_rotation,
    group_rotations,
    merge_rotations,
    normalize,
    rotation_of,
)
from ..synth import reduce_pauli_rotation
from ..tableau import CliffordTableau
from .base import Candidate, LazyRouter


@routing_method("clifford", validate=check_clifford_input)
class CliffordRouter(LazyRouter):
    """Absorbs every Clifford gate into a tableau and extracts each non-Clifford rotation.

    A rotation ``R_P(theta)`` is pulled through the tableau to ``R_P'(s theta)``, then
    reduced onto one qubit of the support of ``P'`` with local basis changes and a fan-in.
    The inverse of that prefix goes back into the tableau.

    With ``merge`` or ``reorder`` the circuit is first normalized into a rotation sequence
    and a trailing Clifford; ``merge`` folds same-axis rotations, ``reorder`` emits the
    cheapest member of each commuting group first.
    """

    def __init__(
        self,
        graph: CouplingGraph,
        depth: int = 0,
        count_mode: Union[CountMode, str] = CountMode.CNOT,
        merge: bool = False,
        reorder: bool = False,
    ):
        super().__init__(graph, depth, count_mode)
        self.merge = merge
        self.reorder = reorder
        self._trailing: Optional[CliffordTableau] = None
        self._group_end: List[int] = []

    @property
    def method_name(self) -> str:
        name = self._method_name
        if self.merge:
            name += "+merge"
        if self.reorder:
            name += "+reorder"
        return name

    @property
    def uses_prepass(self) -> bool:
        return self.merge or self.reorder

    def initial_state(self) -> CliffordTableau:
        return CliffordTableau.identity(self.n_qubits)

    def check_state(self, state) -> None:
        if not isinstance(state, CliffordTableau) or state.n_qubits != self.n_qubits:
            raise ValueError(f"Clifford routing needs a tableau on {self.n_qubits} qubits")

    def prepare(
        self, circuit: Circuit, state: CliffordTableau
    ) -> Tuple[List[Gate], CliffordTableau]:
        self._trailing = None
        self._group_end = []
        if not self.uses_prepass:
            return [gate.as_rz() for gate in circuit], state

        seq = normalize(circuit, initial=state)
        if self.merge:
            seq = merge_rotations(seq)
        groups = group_rotations(seq) if self.reorder else [seq.rotations]

        items = []
        for group in groups:
            items.extend(rot.to_gate() for rot in group)
            self._group_end.extend([len(items)] * len(group))
        self._trailing = seq.trailing
        self.logger.debug(
            f"Prepass left {len(items)} rotations in {len(groups)} groups "
            f"(merge={self.merge}, reorder={self.reorder})"
        )
        return items, CliffordTableau.identity(self.n_qubits)

    def select(self, state: CliffordTableau, items: List[Gate], index: int) -> None:
        if not self.reorder:
            return
        end = self._group_end[index]
        if end - index < 2:
            return
        # Only the next rotation is picked here. _lookahead scores the rest of the group in
        # input order.
        rotations = [rotation_of(gate, self.n_qubits) for gate in items[index:end]]
        pick = cheapest_rotation(rotations, self.graph, state)
        if pick:
            items.insert(index, items.pop(index + pick))

    def finish(self, state: CliffordTableau) -> CliffordTableau:
        if self._trailing is None:
            return state
        return self._trailing.compose(state)

    def absorb(self, state: CliffordTableau, gate: Gate) -> Optional[List[Gate]]:
        gate = gate.as_rz()
        if gate.is_clifford():
            state.apply_gate(gate)
            return []
        return None

    def candidates(self, state: CliffordTableau, gate: Gate) -> List[Candidate]:
        rot = rotation_of(gate.as_rz(), self.n_qubits)
        pulled = state.conjugate(rot.axis, inverse=True)
        support = pulled.support
        tree = self.graph.steiner_tree(support)
        return [self.extract_at(state, rot, pulled, tree, q) for q in support]

    def extract_at(self, state: CliffordTableau, rot, pulled, tree, target: int) -> Candidate:
        """Reduce the pulled axis onto ``target`` and emit ``Rz(s theta)`` there."""
        prefix, q = reduce_pauli_rotation(self.graph, pulled.unsigned(), target, tree)
        tableau = state.copy()
        for gate in prefix:
            tableau.append_gate(gate.inverse())

        image = tableau.conjugate(rot.axis, inverse=True)
        if image.weight != 1 or image.letters[q] != "Z":
            raise TableauError(f"Reduction of {rot} onto qubit {q} left {image}")
        gates = list(prefix) + [Gate.rz(q, rot.angle.scaled(image.sign))]
        return Candidate(gates, tableau)
