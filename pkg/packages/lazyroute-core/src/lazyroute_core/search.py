"""Finite-depth lookahead over extraction choices."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Generic, List, Optional, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

C = TypeVar("C")


@dataclass
class SearchNode(Generic[C]):
    """One choice in the search tree.

    ``score`` is the summed cost along the path from the search root, this node included.
    """

    candidate: C
    score: int
    depth: int
    children: List["SearchNode[C]"] = field(default_factory=list)

    def best_leaf(self) -> int:
        if self.depth == 0 or not self.children:
            return self.score
        return min(child.best_leaf() for child in self.children)


def build_tree(
    candidate: C,
    cost: Callable[[C], int],
    expand: Callable[[C], Sequence[C]],
    depth: int,
    base: int = 0,
) -> SearchNode[C]:
    node = SearchNode(candidate, base + cost(candidate), depth)
    if depth > 0:
        node.children = [
            build_tree(child, cost, expand, depth - 1, node.score) for child in expand(candidate)
        ]
    return node


def recursive_search(
    candidates: Sequence[C],
    cost: Callable[[C], int],
    expand: Callable[[C], Sequence[C]],
    depth: int,
) -> Tuple[int, int]:
    """Pick the candidate whose best continuation over ``depth`` further choices is cheapest.

    ``expand`` returns the choices available at the next extraction point once a candidate
    has been taken, or nothing when the circuit ends. Ties go to the first candidate.

    Returns:
        Index of the chosen candidate and its best path score.

    Raises:
        ValueError: If there are no candidates.
    """
    if not candidates:
        raise ValueError("Search needs at least one candidate")
    if len(candidates) == 1:
        return 0, cost(candidates[0])

    best_index: Optional[int] = None
    best_score = 0
    for index, candidate in enumerate(candidates):
        score = build_tree(candidate, cost, expand, depth).best_leaf()
        if best_index is None or score < best_score:
            best_index, best_score = index, score

    logger.debug(
        f"Search over {len(candidates)} candidates at depth {depth}: "
        f"chose {best_index} with score {best_score}"
    )
    return best_index, best_score
