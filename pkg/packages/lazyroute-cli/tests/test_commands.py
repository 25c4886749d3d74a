"""Tests for the command line."""

import csv
import json

import pytest
import yaml
from lazyroute_common.qasm import load_qasm

from lazyroute_cli.commands import cli


@pytest.fixture
def config_file(temp_dir):
    """Configuration with shallow searches."""
    path = temp_dir / "lazyroute.yaml"
    path.write_text(
        yaml.dump(
            {
                "routing": {"depth": {"swap": 1, "linear": 1, "clifford": 1}},
                "logging": {"level": "WARNING"},
            }
        )
    )
    return path


def invoke(runner, config_file, *args):
    return runner.invoke(cli, ["--config", str(config_file), *args])


class TestGenerate:
    """Test the gen command group."""

    def test_gen_qaoa(self, runner, config_file, temp_dir):
        """QAOA circuits are written as QASM."""
        out = temp_dir / "q.qasm"
        args = ["gen", "qaoa", "--n", "4", "--k", "2", "--out", str(out)]
        result = invoke(runner, config_file, *args)

        assert result.exit_code == 0, result.output
        assert "64 gates, 32 CNOTs" in result.output
        assert load_qasm(out).count_cnots() == 32

    def test_gen_qaoa_strict(self, runner, config_file, temp_dir):
        """Strict pools that run out are reported as errors."""
        out = temp_dir / "q.qasm"
        args = ["gen", "qaoa", "--n", "4", "--k", "3", "--strict", "--out", str(out)]
        result = invoke(runner, config_file, *args)
        assert result.exit_code == 1
        assert "distinct weight-3 parities" in result.output
        assert not out.exists()

    def test_gen_qaoa_help_explains_reuse(self, runner, config_file):
        """The help text says when parities repeat and how to refuse that."""
        result = invoke(runner, config_file, "gen", "qaoa", "--help")
        assert result.exit_code == 0, result.output
        text = " ".join(result.output.split())
        assert "n^2 parity terms" in text
        assert "Parities are distinct while C(n,k) >= n^2" in text
        assert "reused, so some parities repeat, unless --strict is given" in text
        assert "Fail instead of reusing parities when C(n,k) < n^2" in text

    def test_gen_qaoa_reuses_small_pools(self, runner, config_file, temp_dir):
        """Without --strict a pool smaller than n^2 is reused."""
        out = temp_dir / "q.qasm"
        args = ["gen", "qaoa", "--n", "4", "--k", "3", "--out", str(out)]
        result = invoke(runner, config_file, *args)
        assert result.exit_code == 0, result.output
        assert load_qasm(out).count_cnots() == 16 * 4

    def test_gen_pauli(self, runner, config_file, temp_dir):
        """Pauli sequences are lowered to plain QASM."""
        out = temp_dir / "p.qasm"
        result = invoke(
            runner, config_file, "gen", "pauli", "--n", "3", "--count", "4", "--out", str(out)
        )
        assert result.exit_code == 0, result.output
        assert "Wrote" in result.output
        assert "pauli" not in out.read_text()


class TestRoute:
    """Test the route command."""

    def test_route_and_verify(self, runner, config_file, qaoa_file, temp_dir):
        """A routed QAOA instance is written, verified and reported."""
        out = temp_dir / "routed.qasm"
        report = temp_dir / "report.json"
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(qaoa_file),
            "--arch",
            "lnn:4",
            "--method",
            "clifford",
            "--out",
            str(out),
            "--report",
            str(report),
            "--verify",
        )

        assert result.exit_code == 0, result.output
        assert "Verified against the input circuit" in result.output
        data = json.loads(report.read_text())
        assert data["verified"] is True
        assert data["method"] == "clifford"
        assert data["depth"] == 1
        assert data["in_cnot"] == 32
        assert data["counts"]["out_cnot"] == data["out_cnot"]
        assert data["affine_fix"] is None

        routed = load_qasm(out)
        assert routed.n_qubits == 4
        assert routed.count_cnots() == data["out_cnot"]

    def test_depth_override(self, runner, config_file, qaoa_file, temp_dir):
        """An explicit depth wins over the configured one."""
        report = temp_dir / "report.json"
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(qaoa_file),
            "--arch",
            "lnn:4",
            "--method",
            "swap",
            "--depth",
            "0",
            "--out",
            str(temp_dir / "routed.qasm"),
            "--report",
            str(report),
        )
        assert result.exit_code == 0, result.output
        assert json.loads(report.read_text())["depth"] == 0

    def test_merge_needs_clifford(self, runner, config_file, qaoa_file, temp_dir):
        """Rotation merging is refused for SWAP routing."""
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(qaoa_file),
            "--arch",
            "lnn:4",
            "--method",
            "swap",
            "--merge",
            "--out",
            str(temp_dir / "routed.qasm"),
        )
        assert result.exit_code == 2
        assert "only apply to clifford methods" in result.output

    @pytest.mark.parametrize("method", ["swap", "linear", "clifford"])
    def test_sampling_fix(self, runner, config_file, qaoa_file, temp_dir, method):
        """Every method can report a classical bit-string correction."""
        report = temp_dir / "report.json"
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(qaoa_file),
            "--arch",
            "lnn:4",
            "--method",
            method,
            "--out",
            str(temp_dir / "routed.qasm"),
            "--report",
            str(report),
            "--sampling-fix",
        )

        assert result.exit_code == 0, result.output
        fix = json.loads(report.read_text())["affine_fix"]
        assert len(fix["L"]) == 4
        assert all(len(row) == 4 and set(row) <= {"0", "1"} for row in fix["L"])
        assert len(fix["b"]) == 4

    def test_missing_input(self, runner, config_file, temp_dir):
        """Unreadable input files fail with status 1."""
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(temp_dir / "missing.qasm"),
            "--arch",
            "lnn:4",
            "--method",
            "swap",
            "--out",
            str(temp_dir / "routed.qasm"),
        )
        assert result.exit_code == 1
        assert "cannot read" in result.output

    def test_device_too_small(self, runner, config_file, qaoa_file, temp_dir):
        """Circuits wider than the device are rejected."""
        result = invoke(
            runner,
            config_file,
            "route",
            "--in",
            str(qaoa_file),
            "--arch",
            "lnn:3",
            "--method",
            "linear",
            "--out",
            str(temp_dir / "routed.qasm"),
        )
        assert result.exit_code == 1
        assert "does not fit" in result.output


class TestBench:
    """Test the bench command."""

    def test_generator_bench(self, runner, config_file, temp_dir):
        """Generated instances are routed with every method and written as CSV."""
        csv_path = temp_dir / "bench.csv"
        json_path = temp_dir / "bench.json"
        result = invoke(
            runner,
            config_file,
            "bench",
            "--arch",
            "lnn:4",
            "--methods",
            "swap,clifford",
            "--generator",
            "qaoa:n=4,k=2",
            "--seeds",
            "2",
            "--depth",
            "0",
            "--csv",
            str(csv_path),
            "--json",
            str(json_path),
        )

        assert result.exit_code == 0, result.output
        with open(csv_path, newline="") as f:
            records = list(csv.DictReader(f))
        assert [(r["seed"], r["method"]) for r in records] == [
            ("0", "swap"),
            ("0", "clifford"),
            ("1", "swap"),
            ("1", "clifford"),
        ]
        assert all(r["in_cnot"] == "32" for r in records)
        assert len(json.loads(json_path.read_text())["summaries"]) == 2

    def test_directory_bench(self, runner, config_file, qasm_dir):
        """Stored instances can be benchmarked."""
        result = invoke(
            runner,
            config_file,
            "bench",
            "--arch",
            "lnn:4",
            "--methods",
            "linear",
            "--qasm-dir",
            str(qasm_dir),
        )
        assert result.exit_code == 0, result.output
        assert "linear" in result.output

    def test_exactly_one_source(self, runner, config_file, qasm_dir):
        """Generator and directory inputs are mutually exclusive."""
        both = invoke(
            runner,
            config_file,
            "bench",
            "--arch",
            "lnn:4",
            "--generator",
            "qaoa:n=4,k=2",
            "--qasm-dir",
            str(qasm_dir),
        )
        neither = invoke(runner, config_file, "bench", "--arch", "lnn:4")
        assert both.exit_code == 2
        assert neither.exit_code == 2

    def test_unknown_method(self, runner, config_file):
        """Unknown methods are reported before any routing."""
        result = invoke(
            runner,
            config_file,
            "bench",
            "--arch",
            "lnn:4",
            "--methods",
            "sabre",
            "--generator",
            "qaoa:n=4,k=2",
        )
        assert result.exit_code == 1
        assert "Unknown routing method" in result.output


class TestConfig:
    """Test configuration handling on the command line."""

    def test_config_show(self, runner, config_file):
        """The resolved configuration is printed as JSON."""
        result = invoke(runner, config_file, "config", "show")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["routing"]["depth"] == {"swap": 1, "linear": 1, "clifford": 1}
        assert data["logging"]["level"] == "WARNING"

    def test_invalid_log_level(self, runner, config_file):
        """Invalid overrides are usage errors."""
        result = invoke(runner, config_file, "--log-level", "LOUD", "config", "show")
        assert result.exit_code == 2
        assert "Invalid configuration" in result.output
