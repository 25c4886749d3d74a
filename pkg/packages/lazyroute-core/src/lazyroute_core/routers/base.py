"""Lazy-synthesis driver shared by the permutation, linear and Clifford routers."""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from lazyroute_common.circuit import Circuit, CountMode
from lazyroute_common.errors import ArchitectureError
from lazyroute_common.gates import Gate
from lazyroute_common.models import FinalOperatorModel

from ..arch import CouplingGraph
from ..f2 import LinearTable, Permutation
from ..search import recursive_search
from ..tableau import CliffordTableau
from ..verify import check_compliance, equivalent_up_to

Tracker = Union[Permutation, LinearTable, CliffordTableau]


@dataclass
class Candidate:
    """One way to extract the gate at ``cursor - 1``: the emitted gates and the tracker after."""

    gates: List[Gate]
    state: Tracker
    cost: int = 0
    cursor: int = 0


@dataclass
class RoutedOutput:
    """Compliant circuit and residual final operator with ``[final] . U(circuit) = U(input)``."""

    circuit: Circuit
    final_operator: Tracker
    input: Circuit
    method: str
    depth: int
    wall_ms: float = 0.0
    extractions: int = 0
    counts: dict = field(default_factory=dict)

    def verify(self, tol: float = 1e-9, cap: Optional[int] = None) -> bool:
        """Dense check of the routing invariant."""
        return equivalent_up_to(self.final_operator, self.input, self.circuit, tol=tol, cap=cap)

    def violations(self, g: CouplingGraph):
        return check_compliance(self.circuit, g)

    def final_operator_model(self) -> FinalOperatorModel:
        return final_operator_model(self.final_operator)


def final_operator_model(tracker: Tracker) -> FinalOperatorModel:
    if isinstance(tracker, Permutation):
        return FinalOperatorModel(kind="permutation", data=tracker.to_list())
    if isinstance(tracker, LinearTable):
        return FinalOperatorModel(kind="linear", data=tracker.to_rows())
    return FinalOperatorModel(kind="tableau", data=tracker.to_strings())


class LazyRouter(ABC):
    """Absorb gates into a classical tracker and extract compliant subcircuits when forced.

    Subclasses define the tracker, which gates it absorbs, and the candidate extractions
    for the rest. Each extraction with more than one candidate is settled by a
    lookahead over the next ``depth`` extraction points.
    """

    _method_name = "lazy"

    def __init__(
        self,
        graph: CouplingGraph,
        depth: int = 0,
        count_mode: Union[CountMode, str] = CountMode.CNOT,
    ):
        if depth < 0:
            raise ValueError(f"Search depth must be non-negative: {depth}")
        self.graph = graph
        self.depth = depth
        self.count_mode = CountMode(count_mode)
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @property
    def n_qubits(self) -> int:
        return self.graph.n_vertices

    @property
    def method_name(self) -> str:
        return self._method_name

    # Hooks

    @abstractmethod
    def initial_state(self) -> Tracker:
        """Identity tracker on the full device."""

    @abstractmethod
    def check_state(self, state: Tracker) -> None:
        """Raise ValueError unless ``state`` can seed this router."""

    @abstractmethod
    def absorb(self, state: Tracker, gate: Gate) -> Optional[List[Gate]]:
        """Absorb ``gate`` in place and return gates to emit, or None to request extraction."""

    @abstractmethod
    def candidates(self, state: Tracker, gate: Gate) -> List[Candidate]:
        """Every extraction of ``gate``; each candidate owns its tracker copy."""

    @staticmethod
    def copy_state(state: Tracker) -> Tracker:
        return state.copy()

    def prepare(self, circuit: Circuit, state: Tracker) -> Tuple[List[Gate], Tracker]:
        """Gates fed to the driver and the tracker to start from."""
        return list(circuit), state

    def select(self, state: Tracker, items: List[Gate], index: int) -> None:
        """Hook to reorder ``items[index:]`` in place before ``items[index]`` is processed."""

    def finish(self, state: Tracker) -> Tracker:
        return state

    # Driver

    def route(self, circuit: Circuit, initial: Optional[Tracker] = None) -> RoutedOutput:
        """Route ``circuit`` onto the coupling graph.

        Raises:
            ArchitectureError: If the circuit is wider than the graph.
            InadmissibleGateError: If a gate is outside the router's input set.
        """
        if circuit.n_qubits > self.n_qubits:
            raise ArchitectureError(
                f"Circuit on {circuit.n_qubits} qubits does not fit {self.graph.name} "
                f"({self.n_qubits} qubits)"
            )
        circuit = circuit.widened(self.n_qubits)
        validate = getattr(type(self), "_method_validate", None)
        if validate is not None:
            validate(circuit)

        if initial is None:
            state = self.initial_state()
        else:
            self.check_state(initial)
            state = self.copy_state(initial)

        start = time.perf_counter()
        items, state = self.prepare(circuit, state)
        emitted: List[Gate] = []
        extractions = 0

        index = 0
        while index < len(items):
            self.select(state, items, index)
            gate = items[index]
            index += 1

            passed = self.absorb(state, gate)
            if passed is not None:
                emitted.extend(passed)
                continue

            options = self.candidates(state, gate)
            for option in options:
                option.cursor = index
                option.cost = self.cost(option.gates)
            choice, score = self._choose(options, items)
            chosen = options[choice]
            self.logger.debug(
                f"Extracted {gate}: {len(options)} candidates, chose {choice} "
                f"(cost {chosen.cost}, path score {score})"
            )
            emitted.extend(chosen.gates)
            state = chosen.state
            extractions += 1

        state = self.finish(state)
        output = Circuit(self.n_qubits, emitted)
        wall_ms = (time.perf_counter() - start) * 1000.0

        counts = {
            "in_cnot": circuit.count_cnots(self.count_mode),
            "out_cnot": output.count_cnots(self.count_mode),
            "in_2q": circuit.count_two_qubit(),
            "out_2q": output.count_two_qubit(),
        }
        self.logger.info(
            f"Routed {len(circuit)} gates on {self.n_qubits} qubits with {self.method_name} "
            f"(depth {self.depth}): {len(output)} gates, {counts['out_cnot']} CNOTs, "
            f"{wall_ms:.1f} ms"
        )
        return RoutedOutput(
            circuit=output,
            final_operator=state,
            input=circuit,
            method=self.method_name,
            depth=self.depth,
            wall_ms=wall_ms,
            extractions=extractions,
            counts=counts,
        )

    def cost(self, gates: Sequence[Gate]) -> int:
        return Circuit(self.n_qubits, gates).count_cnots(self.count_mode)

    def _choose(self, options: List[Candidate], items: List[Gate]):
        return recursive_search(
            options,
            cost=lambda option: option.cost,
            expand=lambda option: self._lookahead(option, items),
            depth=self.depth,
        )

    def _lookahead(self, option: Candidate, items: List[Gate]) -> List[Candidate]:
        """Choices at the next extraction point after ``option``, absorbing on a copy."""
        state = self.copy_state(option.state)
        index = option.cursor
        # Gates are taken in list order; select is not applied, so a reordering router
        # looks ahead through its commuting groups in their original order.
        absorbed_cost = 0
        while index < len(items):
            gate = items[index]
            index += 1
            passed = self.absorb(state, gate)
            if passed is None:
                options = self.candidates(state, gate)
                for next_option in options:
                    next_option.cursor = index
                    next_option.cost = absorbed_cost + self.cost(next_option.gates)
                return options
            absorbed_cost += self.cost(passed)
        return []
