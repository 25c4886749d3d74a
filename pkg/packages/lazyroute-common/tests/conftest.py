"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path

import pytest
from lazyroute_common.circuit import Circuit
from lazyroute_common.gates import Gate, GateKind


@pytest.fixture
def temp_dir():
    """Temporary directory fixture."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def small_circuit():
    """Three-qubit circuit touching every gate family."""
    return Circuit(
        3,
        [
            Gate.of(GateKind.H, 0),
            Gate.cnot(0, 1),
            Gate.of(GateKind.T, 1),
            Gate.swap(1, 2),
            Gate.rz(2, 0.3),
            Gate.of(GateKind.SQRT_X, 0),
        ],
    )
