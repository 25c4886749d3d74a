"""Tests for coupling graphs and Steiner trees."""

from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from lazyroute_common.errors import ArchitectureError
from lazyroute_core.arch import CouplingGraph, SteinerTree, preset_graph, resolve_arch, steiner_tree


def minimum_tree_edges(g: CouplingGraph, terminals) -> int:
    """Brute-force optimum: fewest vertices of a connected superset of the terminals, minus one."""
    terminals = set(terminals)
    others = [v for v in range(g.n_vertices) if v not in terminals]
    for extra in range(len(others) + 1):
        for chosen in combinations(others, extra):
            vertices = terminals | set(chosen)
            if nx.is_connected(g.graph.subgraph(vertices)):
                return len(vertices) - 1
    raise AssertionError("graph is disconnected")


class TestPresets:
    """Test named architectures."""

    @pytest.mark.parametrize(
        "name,n_vertices,n_edges",
        [
            ("melbourne", 14, 18),
            ("aspen", 16, 18),
            ("grid:3x3", 9, 12),
            ("grid:2x4", 8, 10),
            ("lnn:5", 5, 4),
            ("all2all:4", 4, 6),
        ],
    )
    def test_sizes(self, name, n_vertices, n_edges):
        """Presets have the documented shapes."""
        g = preset_graph(name)
        assert g.n_vertices == n_vertices
        assert len(g.edges) == n_edges
        assert g.name == name

    def test_unknown_preset(self):
        """Unknown names are rejected."""
        with pytest.raises(ArchitectureError, match="Unknown architecture"):
            preset_graph("tokyo")

    def test_malformed_size(self):
        """Zero-sized presets are rejected."""
        with pytest.raises(ArchitectureError, match="Malformed"):
            preset_graph("lnn:0")

    def test_disconnected_graph(self):
        """Coupling graphs must be connected."""
        with pytest.raises(ArchitectureError, match="not connected"):
            CouplingGraph(3, [(0, 1)])

    def test_self_loop(self):
        """Self-loops are rejected."""
        with pytest.raises(ArchitectureError, match="Self-loop"):
            CouplingGraph(2, [(0, 1), (1, 1)])

    def test_edge_out_of_range(self):
        """Edges must stay inside the vertex range."""
        with pytest.raises(ArchitectureError, match="outside"):
            CouplingGraph(2, [(0, 2)])

    def test_from_edges_infers_width(self):
        """Without an explicit width the largest endpoint decides it."""
        g = CouplingGraph.from_edges([[0, 1], [1, 2], [2, 3]])
        assert g.n_vertices == 4
        assert g.name == "custom"
        assert g.has_edge(3, 2)

    def test_from_edges_explicit_width(self):
        """An explicit width is kept, so isolated vertices disconnect the graph."""
        g = CouplingGraph.from_edges([(0, 1)], n_vertices=2, name="pair")
        assert g.n_vertices == 2
        assert g.name == "pair"
        with pytest.raises(ArchitectureError, match="not connected"):
            CouplingGraph.from_edges([(0, 1)], n_vertices=3)

    def test_from_edges_malformed(self):
        """Every edge needs two ends."""
        with pytest.raises(ArchitectureError, match="Malformed edge list"):
            CouplingGraph.from_edges([(0, 1), (1, 2, 3)])


class TestGraphFile:
    """Test the edge-list file format."""

    def test_from_file(self, temp_dir):
        """Header, edges and comments are read."""
        path = temp_dir / "ring.graph"
        path.write_text("# a ring\nqubits 4\n0 1\n1 2  # middle\n2 3\n3 0\n")

        g = resolve_arch(f"file:{path}")

        assert g.n_vertices == 4
        assert g.has_edge(0, 3)
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 2)

    def test_header_width_is_kept(self, temp_dir):
        """The declared qubit count wins over the edges, so spare qubits must be coupled."""
        path = temp_dir / "spare.graph"
        path.write_text("qubits 4\n0 1\n1 2\n")
        with pytest.raises(ArchitectureError, match="not connected"):
            CouplingGraph.from_file(str(path))

        path.write_text("qubits 3\n0 1\n1 2\n")
        g = CouplingGraph.from_file(str(path))
        assert g.n_vertices == 3
        assert g.name == f"file:{path}"

    def test_missing_header(self, temp_dir):
        """The first non-comment line must be the qubit count."""
        path = temp_dir / "bad.graph"
        path.write_text("0 1\n")
        with pytest.raises(ArchitectureError, match="expected 'qubits N'"):
            CouplingGraph.from_file(str(path))

    def test_malformed_edge(self, temp_dir):
        """Edge lines need exactly two integers."""
        path = temp_dir / "bad.graph"
        path.write_text("qubits 3\n0 1 2\n")
        with pytest.raises(ArchitectureError, match="expected 'u v'"):
            CouplingGraph.from_file(str(path))

    def test_missing_file(self, temp_dir):
        """Unreadable files raise an architecture error."""
        with pytest.raises(ArchitectureError, match="Cannot read"):
            CouplingGraph.from_file(str(temp_dir / "nope.graph"))


class TestPaths:
    """Test distances and shortest paths."""

    def test_distance(self, grid3x3):
        """Grid distances are Manhattan distances."""
        assert grid3x3.distance(0, 8) == 4
        assert grid3x3.distance(4, 4) == 0

    def test_lexicographic_shortest_path(self, grid3x3):
        """Ties between shortest paths go to lower vertex indices."""
        assert grid3x3.shortest_path(0, 8) == (0, 1, 2, 5, 8)
        assert grid3x3.shortest_path(0, 7) == (0, 1, 4, 7)

    def test_path_follows_edges(self):
        """Every step of a path is a coupling edge."""
        g = preset_graph("melbourne")
        path = g.shortest_path(0, 7)
        assert len(path) == g.distance(0, 7) + 1
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


class TestSteinerTree:
    """Test approximate Steiner trees."""

    def test_single_terminal(self, lnn6):
        """One terminal needs no edges."""
        tree = steiner_tree(lnn6, [3])
        assert tree.edges == frozenset()
        assert tree.size == 1

    def test_line_segment(self, lnn6):
        """On a line the tree is the segment between the extreme terminals."""
        tree = steiner_tree(lnn6, [1, 4])
        assert tree.edges == frozenset({(1, 2), (2, 3), (3, 4)})
        assert tree.vertices == frozenset({1, 2, 3, 4})

    def test_empty_terminals(self, lnn6):
        """A tree needs at least one terminal."""
        with pytest.raises(ValueError, match="at least one terminal"):
            steiner_tree(lnn6, [])

    def test_root_must_be_terminal(self, lnn6):
        """Roots are chosen among the terminals."""
        with pytest.raises(ValueError, match="not a terminal"):
            steiner_tree(lnn6, [0, 2], root=1)

    def test_with_root(self, lnn6):
        """Rerooting keeps the edges and rejects foreign vertices."""
        tree = steiner_tree(lnn6, [0, 2])
        assert tree.with_root(1).root == 1
        with pytest.raises(ValueError, match="not a tree vertex"):
            tree.with_root(5)

    @pytest.mark.parametrize("name", ["lnn:6", "grid:3x3", "grid:2x4", "aspen"])
    def test_tree_shape_and_bound(self, name, rng):
        """Trees span their terminals within twice the optimum."""
        g = preset_graph(name)
        for _ in range(12):
            k = int(rng.integers(2, 5))
            terminals = [int(t) for t in rng.choice(g.n_vertices, size=k, replace=False)]
            tree = steiner_tree(g, terminals)

            graph = tree.as_graph()
            assert nx.is_tree(graph)
            assert set(terminals) <= set(graph.nodes)
            assert all(g.has_edge(a, b) for a, b in tree.edges)
            leaves = [v for v in graph.nodes if graph.degree(v) == 1]
            assert set(leaves) <= set(terminals)

            optimum = minimum_tree_edges(g, terminals)
            assert len(tree.edges) <= 2 * (1 - 1 / k) * optimum + 1e-9

    @pytest.mark.slow
    def test_bound_on_every_small_graph(self):
        """Every connected graph up to seven vertices, with every terminal set, meets the bound."""
        checked = 0
        for atlas_graph in nx.graph_atlas_g():
            n = atlas_graph.number_of_nodes()
            if n < 2 or not nx.is_connected(atlas_graph):
                continue
            g = CouplingGraph.from_edges(atlas_graph.edges, n_vertices=n, name="atlas")
            for k in range(1, n + 1):
                for terminals in combinations(range(n), k):
                    tree = steiner_tree(g, terminals)
                    assert nx.is_tree(tree.as_graph())
                    optimum = minimum_tree_edges(g, terminals)
                    assert len(tree.edges) <= 2 * (1 - 1 / k) * optimum + 1e-9, (
                        sorted(g.edges),
                        terminals,
                    )
                    checked += 1
        assert checked > 50000

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(40))
    def test_bound_on_eight_vertices(self, seed):
        """Random connected eight-vertex graphs meet the bound for every terminal set."""
        rng = np.random.default_rng(seed)
        tree_edges = [(v, int(rng.integers(v))) for v in range(1, 8)]
        extra = [e for e in combinations(range(8), 2) if rng.random() < 0.25]
        g = CouplingGraph.from_edges(tree_edges + extra, n_vertices=8, name="random8")
        for k in range(1, 9):
            for terminals in combinations(range(8), k):
                tree = steiner_tree(g, terminals)
                optimum = minimum_tree_edges(g, terminals)
                assert len(tree.edges) <= 2 * (1 - 1 / k) * optimum + 1e-9, terminals

    def test_method_matches_function(self, grid3x3):
        """The graph method delegates to the module function."""
        assert grid3x3.steiner_tree([0, 8]) == steiner_tree(grid3x3, [0, 8])
        assert isinstance(grid3x3.steiner_tree([0, 8]), SteinerTree)
