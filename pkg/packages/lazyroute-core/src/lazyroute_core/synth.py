"""CNOT fan-in/fan-out along Steiner trees and Pauli-rotation reduction."""

import logging
from typing import Iterable, List, Optional, Set, Tuple

import networkx as nx
from lazyroute_common.angles import Angle, as_angle
from lazyroute_common.circuit import Circuit
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.paulistring import PauliString

from .arch import CouplingGraph, SteinerTree, steiner_tree

logger = logging.getLogger(__name__)


def _lowest_leaf(tree: nx.Graph, exclude: Optional[int] = None) -> int:
    leaves = [v for v in tree.nodes if tree.degree(v) <= 1 and v != exclude]
    return min(leaves)


def _only_neighbor(tree: nx.Graph, v: int) -> int:
    return next(iter(tree.adj[v]))


def _width(tree: SteinerTree, extra: Iterable[int] = ()) -> int:
    return max(list(tree.vertices) + list(extra)) + 1


def fan_in(
    tree: SteinerTree, terminals: Iterable[int], root: int, n_qubits: Optional[int] = None
) -> Circuit:
    """CNOTs that leave the XOR of the terminal wires on ``root``.

    Leaves are folded into their neighbor, lowest index first. A neighbor that does not
    yet carry a terminal parity is cleared by a CNOT onto the leaf before the fold, and
    carries from then on. Non-root wires end in arbitrary states.

    Raises:
        ValueError: If the root is not a terminal.
    """
    terminals = set(int(t) for t in terminals)
    if root not in terminals:
        raise ValueError(f"Fan-in root {root} is not a terminal")
    n_qubits = n_qubits or _width(tree, terminals)

    work = tree.as_graph()
    work.add_nodes_from(terminals)
    carrying: Set[int] = set(terminals)
    gates: List[Gate] = []

    while work.number_of_nodes() > 1:
        v = _lowest_leaf(work, exclude=root)
        u = _only_neighbor(work, v)
        if u not in carrying:
            gates.append(Gate.cnot(u, v))
        gates.append(Gate.cnot(v, u))
        carrying.add(u)
        work.remove_node(v)

    logger.debug(f"Fan-in onto {root} over {tree.size} vertices: {len(gates)} CNOTs")
    return Circuit(n_qubits, gates)


def fan_out(
    tree: SteinerTree, targets: Iterable[int], root: int, n_qubits: Optional[int] = None
) -> Circuit:
    """CNOTs that clear every target of a tracked column onto ``root``.

    First every tree vertex is set to 1 by copying from a leaf into its unset neighbor,
    then the leaves other than the root are cleared from their neighbor, lowest first.
    A column equal to 1 exactly on ``targets`` and ``root`` ends as the unit vector at
    ``root``; the root row is never a CNOT target.
    """
    targets = set(int(t) for t in targets) - {root}
    n_qubits = n_qubits or _width(tree, targets | {root})
    if not targets:
        return Circuit(n_qubits)

    gates: List[Gate] = []
    ones = targets | {root}

    spread = tree.as_graph()
    while spread.number_of_nodes() > 1:
        v = _lowest_leaf(spread)
        u = _only_neighbor(spread, v)
        if u not in ones:
            gates.append(Gate.cnot(v, u))
            ones.add(u)
        spread.remove_node(v)

    clear = tree.as_graph()
    while clear.number_of_nodes() > 1:
        v = _lowest_leaf(clear, exclude=root)
        u = _only_neighbor(clear, v)
        gates.append(Gate.cnot(u, v))
        clear.remove_node(v)

    return Circuit(n_qubits, gates)


def diagonalize_local(p: PauliString) -> Tuple[Circuit, PauliString]:
    """Single-qubit basis changes sending ``p`` to a string over ``{I, Z}``.

    H turns X into Z and SqrtX turns Y into Z, both with sign +1.
    """
    gates = []
    letters = []
    for q, ch in enumerate(p.letters):
        if ch == "X":
            gates.append(Gate.of(GateKind.H, q))
        elif ch == "Y":
            gates.append(Gate.of(GateKind.SQRT_X, q))
        letters.append("Z" if ch in "XYZ" else "I")
    return Circuit(p.n_qubits, gates), PauliString("".join(letters), p.sign)


def reduce_pauli_rotation(
    g: CouplingGraph, p: PauliString, target: int, tree: Optional[SteinerTree] = None
) -> Tuple[Circuit, int]:
    """Compliant Clifford prefix ``c`` with ``c^dagger Z_target c = p`` (up to the sign of ``p``).

    ``c :: Rz(sign * theta)`` followed by the inverse of ``c`` implements ``R_p(theta)``.

    Raises:
        ValueError: If ``p`` is the identity or ``target`` lies outside its support.
    """
    support = p.support
    if not support:
        raise ValueError("Cannot reduce a rotation about the identity")
    if target not in support:
        raise ValueError(f"Target {target} is outside the support {support}")
    local, _ = diagonalize_local(p)
    tree = tree or steiner_tree(g, support)
    folded = fan_in(tree, support, target, n_qubits=p.n_qubits)
    return local + folded, target


def lower_pauli_rotation(axis: PauliString, theta) -> Circuit:
    """Unconstrained ladder lowering: basis change, CNOT chain, Rz, then the mirror."""
    angle: Angle = as_angle(theta).scaled(axis.sign)
    support = axis.support
    if not support:
        raise ValueError("Cannot lower a rotation about the identity")

    local, _ = diagonalize_local(axis.unsigned())
    chain = [Gate.cnot(a, b) for a, b in zip(support, support[1:])]
    gates = (
        list(local)
        + chain
        + [Gate.rz(support[-1], angle)]
        + list(reversed(chain))
        + [gate.inverse() for gate in reversed(list(local))]
    )
    return Circuit(axis.n_qubits, gates)
