"""Lazy-synthesis qubit routing: trackers, synthesis primitives, routers and oracles."""

__version__ = "0.0.1"

from .arch import CouplingGraph, SteinerTree, preset_graph, resolve_arch, steiner_tree
from .config import RouterConfig
from .f2 import (
    LinearTable,
    Permutation,
    apply_col_op,
    apply_row_op,
    linear_update_cnot,
    perm_update_swap,
)
from .finalize import (
    AffineFix,
    Observable,
    apply_fix,
    conjugate_observable,
    linear_fix,
    sampling_fix,
)
from .pauli import PauliRotation
from .prepass import (
    RotationSequence,
    group_rotations,
    merge_rotations,
    normalize,
    reorder_within_group,
)
from .routers import METHODS, RoutedOutput, route
from .search import SearchNode, recursive_search
from .synth import diagonalize_local, fan_in, fan_out, reduce_pauli_rotation
from .tableau import CliffordTableau, compose, conjugate_pauli, tableau_invert, tableau_update
from .verify import check_compliance, dense_unitary, equivalent_up_to, f2_simulate

__all__ = [
    "CouplingGraph",
    "SteinerTree",
    "preset_graph",
    "resolve_arch",
    "steiner_tree",
    "RouterConfig",
    "LinearTable",
    "Permutation",
    "apply_col_op",
    "apply_row_op",
    "linear_update_cnot",
    "perm_update_swap",
    "AffineFix",
    "Observable",
    "apply_fix",
    "conjugate_observable",
    "linear_fix",
    "sampling_fix",
    "PauliRotation",
    "RotationSequence",
    "group_rotations",
    "merge_rotations",
    "normalize",
    "reorder_within_group",
    "METHODS",
    "RoutedOutput",
    "route",
    "SearchNode",
    "recursive_search",
    "diagonalize_local",
    "fan_in",
    "fan_out",
    "reduce_pauli_rotation",
    "CliffordTableau",
    "compose",
    "conjugate_pauli",
    "tableau_invert",
    "tableau_update",
    "check_compliance",
    "dense_unitary",
    "equivalent_up_to",
    "f2_simulate",
]
