"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path

import numpy as np
import pytest
from lazyroute_common.circuit import Circuit
from lazyroute_common.gates import Gate, GateKind
from lazyroute_core.arch import preset_graph
from lazyroute_core.config import RouterConfig

ONE_QUBIT_CLIFFORDS = [GateKind.H, GateKind.S, GateKind.SDG, GateKind.SQRT_X, GateKind.X]
ONE_QUBIT_PHASES = [GateKind.T, GateKind.TDG]


def build_random_circuit(
    n: int, count: int, seed: int, clifford_only: bool = False, two_qubit_share: float = 0.4
) -> Circuit:
    """Random circuit over 1q Cliffords, T/Tdg, real Rz, CNOT and SWAP on arbitrary pairs."""
    rng = np.random.default_rng(seed)
    one_qubit = ONE_QUBIT_CLIFFORDS + ([] if clifford_only else ONE_QUBIT_PHASES)
    gates = []
    for _ in range(count):
        roll = rng.random()
        if roll < two_qubit_share:
            a, b = (int(q) for q in rng.choice(n, size=2, replace=False))
            kind = GateKind.CNOT if rng.random() < 0.8 else GateKind.SWAP
            gates.append(Gate(kind, (a, b)))
        elif roll < two_qubit_share + 0.1 and not clifford_only:
            gates.append(Gate.rz(int(rng.integers(n)), float(rng.uniform(0.1, 1.4))))
        else:
            kind = one_qubit[int(rng.integers(len(one_qubit)))]
            gates.append(Gate.of(kind, int(rng.integers(n))))
    return Circuit(n, gates)


@pytest.fixture
def temp_dir():
    """Temporary directory fixture."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def rng():
    """Seeded generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def test_config():
    """Test router configuration."""
    return RouterConfig(log_level="DEBUG")


@pytest.fixture
def lnn6():
    return preset_graph("lnn:6")


@pytest.fixture
def grid3x3():
    return preset_graph("grid:3x3")


@pytest.fixture
def all2all8():
    return preset_graph("all2all:8")


@pytest.fixture
def random_circuit():
    """Factory for seeded random circuits."""
    return build_random_circuit


@pytest.fixture
def worked_circuit():
    """Six-qubit Clifford+T example with ten gates."""
    return Circuit(
        6,
        [
            Gate.of(GateKind.H, 0),
            Gate.of(GateKind.SQRT_X, 4),
            Gate.cnot(0, 4),
            Gate.cnot(4, 2),
            Gate.of(GateKind.T, 2),
            Gate.of(GateKind.H, 2),
            Gate.of(GateKind.SQRT_X, 1),
            Gate.cnot(1, 5),
            Gate.cnot(5, 3),
            Gate.of(GateKind.T, 3),
        ],
    )
