"""Pytest configuration and fixtures."""

import tempfile
from pathlib import Path

import pytest
from click.testing import CliRunner
from lazyroute_common.qasm import save_qasm
from lazyroute_core.config import RouterConfig

from lazyroute_cli.generators import qaoa_maxklin2


@pytest.fixture
def temp_dir():
    """Temporary directory fixture."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def test_config():
    """Test router configuration with shallow searches."""
    return RouterConfig(swap_depth=1, linear_depth=1, clifford_depth=1, log_level="DEBUG")


@pytest.fixture
def qaoa_file(temp_dir):
    """Four-qubit QAOA instance on disk."""
    path = temp_dir / "qaoa4.qasm"
    save_qasm(qaoa_maxklin2(4, 2, seed=3), path)
    return path


@pytest.fixture
def qasm_dir(temp_dir):
    """Directory with two small QASM instances."""
    directory = temp_dir / "instances"
    directory.mkdir()
    save_qasm(qaoa_maxklin2(4, 2, seed=0), directory / "b.qasm")
    save_qasm(qaoa_maxklin2(4, 3, seed=1), directory / "a.qasm")
    return directory
