"""Routing methods and the ``route`` entry point."""

from typing import List, Optional, Tuple, Union

from lazyroute_common.circuit import Circuit, CountMode
from lazyroute_common.registry import MethodRegistry

from ..arch import CouplingGraph
from .base import Candidate, LazyRouter, RoutedOutput, Tracker, final_operator_model
from .clifford import CliffordRouter
from .linear import LinearRouter, check_linear_input
from .swap import PermutationRouter, check_swap_input, meeting_candidates

registry = MethodRegistry()
registry.register(PermutationRouter)
registry.register(LinearRouter)
registry.register(CliffordRouter)

CLIFFORD_VARIANTS = {
    "clifford": (False, False),
    "clifford+merge": (True, False),
    "clifford+reorder": (False, True),
    "clifford+merge+reorder": (True, True),
}

METHODS: List[str] = ["swap", "linear"] + list(CLIFFORD_VARIANTS)


def parse_method(method: str) -> Tuple[str, bool, bool]:
    """Split a method name into base method, merge flag and reorder flag."""
    if method in CLIFFORD_VARIANTS:
        merge, reorder = CLIFFORD_VARIANTS[method]
        return "clifford", merge, reorder
    if registry.get_router(method) is None:
        raise ValueError(f"Unknown routing method {method!r}; choose from {', '.join(METHODS)}")
    return method, False, False


def make_router(
    g: CouplingGraph,
    method: str,
    depth: int = 0,
    merge: bool = False,
    reorder: bool = False,
    count_mode: Union[CountMode, str] = CountMode.CNOT,
) -> LazyRouter:
    base, variant_merge, variant_reorder = parse_method(method)
    merge = merge or variant_merge
    reorder = reorder or variant_reorder
    if base != "clifford" and (merge or reorder):
        raise ValueError(f"merge and reorder only apply to clifford routing, not {base}")

    router_cls = registry.get_router(base)
    if base == "clifford":
        return router_cls(g, depth, count_mode, merge=merge, reorder=reorder)
    return router_cls(g, depth, count_mode)


def route(
    c: Circuit,
    g: CouplingGraph,
    method: str,
    depth: int = 0,
    merge: bool = False,
    reorder: bool = False,
    initial: Optional[Tracker] = None,
    count_mode: Union[CountMode, str] = CountMode.CNOT,
) -> RoutedOutput:
    """Route ``c`` onto ``g`` with one of the lazy-synthesis methods.

    Args:
        c: Input circuit, at most as wide as the graph
        g: Coupling graph
        method: ``swap``, ``linear`` or a ``clifford`` variant
        depth: Lookahead depth, 0 for greedy
        merge: Merge same-axis rotations first (clifford only)
        reorder: Reorder commuting rotations cheapest first (clifford only)
        initial: Final operator of a previous run to continue from
        count_mode: How two-qubit gates are scored

    Returns:
        The compliant circuit with its residual final operator.
    """
    router = make_router(g, method, depth, merge, reorder, count_mode)
    return router.route(c, initial=initial)


__all__ = [
    "Candidate",
    "CliffordRouter",
    "LazyRouter",
    "LinearRouter",
    "METHODS",
    "PermutationRouter",
    "RoutedOutput",
    "Tracker",
    "check_linear_input",
    "check_swap_input",
    "final_operator_model",
    "make_router",
    "meeting_candidates",
    "parse_method",
    "registry",
    "route",
]
