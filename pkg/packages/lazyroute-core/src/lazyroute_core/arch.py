"""Hardware coupling graphs, shortest paths and approximate Steiner trees."""

import logging
import re
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from lazyroute_common.errors import ArchitectureError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

MELBOURNE_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 8), (8, 9), (9, 10),
    (10, 11), (11, 12), (12, 13), (13, 1), (2, 12), (3, 11), (4, 10), (5, 9), (8, 7),
]  # fmt: skip

ASPEN_EDGES = (
    [(i, (i + 1) % 8) for i in range(8)]
    + [(8 + i, 8 + (i + 1) % 8) for i in range(8)]
    + [(2, 13), (1, 14)]
)

_GRID_RE = re.compile(r"^grid:(\d+)x(\d+)$")
_SIZED_RE = re.compile(r"^(lnn|all2all):(\d+)$")


def _normalize(edge: Sequence[int]) -> Edge:
    a, b = int(edge[0]), int(edge[1])
    return (a, b) if a < b else (b, a)


class CouplingGraph:
    """Undirected connected coupling graph with precomputed hop distances.

    Neighbors are always visited in ascending index order, so every path and tree
    derived from the graph is deterministic.
    """

    def __init__(self, n_vertices: int, edges: Iterable[Sequence[int]], name: str = "custom"):
        if n_vertices < 1:
            raise ArchitectureError(f"Graph needs at least one vertex, got {n_vertices}")
        normalized = set()
        for edge in edges:
            a, b = _normalize(edge)
            if a == b:
                raise ArchitectureError(f"Self-loop on vertex {a}")
            if a < 0 or b >= n_vertices:
                raise ArchitectureError(f"Edge ({a}, {b}) outside 0..{n_vertices - 1}")
            normalized.add((a, b))

        self.name = name
        self.n_vertices = n_vertices
        self.edges: FrozenSet[Edge] = frozenset(normalized)

        # Sorted insertion keeps each adjacency list in ascending order.
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(n_vertices))
        self.graph.add_edges_from(sorted(normalized))
        if not nx.is_connected(self.graph):
            raise ArchitectureError(f"Coupling graph {name!r} is not connected")

        self.dist = np.zeros((n_vertices, n_vertices), dtype=np.int64)
        for source, lengths in nx.all_pairs_shortest_path_length(self.graph):
            for target, length in lengths.items():
                self.dist[source, target] = length

        self.next_hop = np.full((n_vertices, n_vertices), -1, dtype=np.int64)
        for a in range(n_vertices):
            for b in range(n_vertices):
                if a == b:
                    continue
                for w in self.neighbors(a):
                    if self.dist[w, b] == self.dist[a, b] - 1:
                        self.next_hop[a, b] = w
                        break

        logger.debug(
            f"Built coupling graph {name} with {n_vertices} vertices, {len(self.edges)} edges"
        )

    def __repr__(self) -> str:
        return f"CouplingGraph({self.name!r}, n={self.n_vertices}, edges={len(self.edges)})"

    def neighbors(self, v: int) -> List[int]:
        return list(self.graph.adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return _normalize((a, b)) in self.edges

    def distance(self, a: int, b: int) -> int:
        return int(self.dist[a, b])

    def shortest_path(self, a: int, b: int) -> Tuple[int, ...]:
        """Lexicographically smallest shortest path from ``a`` to ``b``."""
        path = [a]
        while path[-1] != b:
            path.append(int(self.next_hop[path[-1], b]))
        return tuple(path)

    def steiner_tree(self, terminals: Iterable[int], root: Optional[int] = None) -> "SteinerTree":
        return steiner_tree(self, terminals, root)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Sequence[int]],
        n_vertices: Optional[int] = None,
        name: str = "custom",
    ) -> "CouplingGraph":
        """Graph on ``n_vertices`` (default: one past the largest endpoint).

        Raises:
            ArchitectureError: If an edge is malformed or the graph is disconnected.
        """
        edges = [tuple(e) for e in edges]
        if any(len(e) != 2 for e in edges):
            raise ArchitectureError(f"Malformed edge list for {name!r}: every edge needs two ends")
        if n_vertices is None:
            n_vertices = max((max(e) for e in edges), default=0) + 1
        return cls(n_vertices, edges, name)

    @classmethod
    def from_file(cls, path: str) -> "CouplingGraph":
        """Load the ``qubits N`` + ``u v`` per line format; ``#`` starts a comment."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ArchitectureError(f"Cannot read graph file {path}: {e}")

        n_vertices = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if n_vertices is None:
                if len(fields) != 2 or fields[0] != "qubits" or not fields[1].isdigit():
                    raise ArchitectureError(f"{path}:{lineno}: expected 'qubits N'")
                n_vertices = int(fields[1])
                continue
            if len(fields) != 2 or not all(f.isdigit() for f in fields):
                raise ArchitectureError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            edges.append((int(fields[0]), int(fields[1])))

        if n_vertices is None:
            raise ArchitectureError(f"{path}: missing 'qubits N' header")
        return cls.from_edges(edges, n_vertices, name=f"file:{path}")


def preset_graph(name: str) -> CouplingGraph:
    """Build a named architecture: melbourne, aspen, grid:RxC, lnn:N, all2all:N."""
    if name == "melbourne":
        return CouplingGraph(14, MELBOURNE_EDGES, name)
    if name == "aspen":
        return CouplingGraph(16, ASPEN_EDGES, name)

    grid = _GRID_RE.match(name)
    if grid:
        rows, cols = int(grid.group(1)), int(grid.group(2))
        if rows < 1 or cols < 1:
            raise ArchitectureError(f"Malformed grid dimensions in {name!r}")
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return CouplingGraph(rows * cols, edges, name)

    sized = _SIZED_RE.match(name)
    if sized:
        kind, n = sized.group(1), int(sized.group(2))
        if n < 1:
            raise ArchitectureError(f"Malformed size in {name!r}")
        if kind == "lnn":
            return CouplingGraph(n, [(i, i + 1) for i in range(n - 1)], name)
        return CouplingGraph(n, combinations(range(n), 2), name)

    raise ArchitectureError(f"Unknown architecture preset {name!r}")


def resolve_arch(spec: str) -> CouplingGraph:
    """Accept a preset name or ``file:<path>``."""
    if spec.startswith("file:"):
        return CouplingGraph.from_file(spec[len("file:"):])
    return preset_graph(spec)


@dataclass(frozen=True)
class SteinerTree:
    """Subtree of a coupling graph spanning a terminal set."""

    edges: FrozenSet[Edge]
    terminals: FrozenSet[int]
    root: Optional[int] = None

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for e in self.edges for v in e) | self.terminals

    @property
    def size(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    def with_root(self, root: int) -> "SteinerTree":
        if root not in self.vertices:
            raise ValueError(f"Root {root} is not a tree vertex")
        return SteinerTree(self.edges, self.terminals, root)

    def as_graph(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(sorted(self.vertices))
        tree.add_edges_from(sorted(self.edges))
        return tree


def steiner_tree(
    g: CouplingGraph, terminals: Iterable[int], root: Optional[int] = None
) -> SteinerTree:
    """Takahashi-Matsuyama nearest-terminal insertion.

    Grows a tree from the lowest terminal, repeatedly attaching the terminal closest
    to the tree along a shortest path. Ties go to the lowest terminal, then the lowest
    tree vertex.
    """
    terms = sorted(set(int(t) for t in terminals))
    if not terms:
        raise ValueError("Steiner tree needs at least one terminal")
    if root is not None and root not in terms:
        raise ValueError(f"Root {root} is not a terminal")

    in_tree = {terms[0]}
    edges = set()
    remaining = [t for t in terms[1:]]
    while remaining:
        tree_list = sorted(in_tree)
        sub = g.dist[np.ix_(remaining, tree_list)]
        flat = int(np.argmin(sub))
        t = remaining[flat // len(tree_list)]
        v = tree_list[flat % len(tree_list)]
        path = g.shortest_path(v, t)
        for a, b in zip(path, path[1:]):
            edges.add(_normalize((a, b)))
        in_tree.update(path)
        remaining = [r for r in remaining if r not in in_tree]

    terminal_set = frozenset(terms)
    edges = _prune_leaves(edges, terminal_set)
    return SteinerTree(frozenset(edges), terminal_set, root)


def _prune_leaves(edges: set, terminals: FrozenSet[int]) -> set:
    edges = set(edges)
    while True:
        degree = {}
        for a, b in edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        prunable = [v for v, d in degree.items() if d == 1 and v not in terminals]
        if not prunable:
            return edges
        edges = {e for e in edges if e[0] not in prunable and e[1] not in prunable}
