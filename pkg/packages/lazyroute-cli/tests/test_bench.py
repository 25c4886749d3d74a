"""Tests for the benchmark runner and its reports."""

import csv
import json

import pytest
from lazyroute_common.errors import ArchitectureError
from lazyroute_common.models import BenchRow, BenchSummary

from lazyroute_cli.bench import BenchJob, BenchRunner, run_job, summarize
from lazyroute_cli.reports import BENCH_COLUMNS, write_bench_csv, write_json


def row(seed: int, method: str, out_cnot: int, in_cnot: int = 10) -> BenchRow:
    return BenchRow(
        seed=seed,
        instance=f"i{seed}",
        method=method,
        arch="lnn:4",
        depth=0,
        in_cnot=in_cnot,
        out_cnot=out_cnot,
        overhead_pct=100.0 * (out_cnot - in_cnot) / in_cnot,
        wall_ms=1.0,
    )


class TestSummaries:
    """Test per-method aggregation."""

    def test_means_and_best_share(self):
        """Ties count as a win for every tied method."""
        rows = [
            row(0, "swap", 20),
            row(0, "clifford", 15),
            row(1, "swap", 12),
            row(1, "clifford", 12),
        ]
        swap, clifford = summarize(rows, ["swap", "clifford"])

        assert swap.method == "swap"
        assert swap.instances == 2
        assert swap.mean_out_cnot == 16
        assert swap.mean_overhead_pct == pytest.approx(60.0)
        assert swap.best_share == 0.5
        assert clifford.best_share == 1.0

    def test_methods_without_rows_are_skipped(self):
        """Summaries only cover methods that ran."""
        assert [s.method for s in summarize([row(0, "swap", 5)], ["swap", "linear"])] == ["swap"]


class TestBenchJob:
    """Test single routing jobs."""

    def test_generator_job(self):
        """A generator job routes the seeded instance."""
        job = BenchJob(
            seed=2,
            instance="qaoa#2",
            method="swap",
            arch="lnn:4",
            depth=0,
            generator="qaoa:n=4,k=2",
        )
        result = run_job(job)
        assert result.method == "swap"
        assert result.in_cnot == 32
        assert result.out_cnot >= result.in_cnot
        assert result.overhead_pct == pytest.approx(
            100.0 * (result.out_cnot - result.in_cnot) / result.in_cnot
        )

    def test_job_without_source(self):
        """Jobs need a generator or a path."""
        job = BenchJob(seed=0, instance="x", method="swap", arch="lnn:4", depth=0)
        with pytest.raises(ValueError, match="neither a generator nor a QASM path"):
            job.circuit()


class TestMelbourneTrend:
    """Test the method ranking on the fourteen-qubit device."""

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(3))
    def test_clifford_beats_swap(self, seed):
        """Clifford tracking with merging and reordering needs fewer CNOTs than SWAP routing."""
        rows = {
            method: run_job(
                BenchJob(
                    seed=seed,
                    instance=f"qaoa#{seed}",
                    method=method,
                    arch="melbourne",
                    depth=2,
                    generator="qaoa:n=14,k=2",
                )
            )
            for method in ("swap", "clifford+merge+reorder")
        }
        swap, clifford = rows["swap"], rows["clifford+merge+reorder"]
        assert swap.in_cnot == clifford.in_cnot
        assert swap.out_cnot > swap.in_cnot
        assert clifford.out_cnot < swap.out_cnot


class TestBenchRunner:
    """Test job expansion and execution."""

    def test_generator_jobs(self, test_config):
        """Jobs cover every (seed, method) pair with per-method depths."""
        runner = BenchRunner("lnn:4", ["swap", "clifford+merge"], test_config)
        jobs = runner.generator_jobs("qaoa:n=4,k=2", range(3))
        assert len(jobs) == 6
        assert [(j.seed, j.method) for j in jobs[:2]] == [(0, "swap"), (0, "clifford+merge")]
        assert jobs[0].instance == "qaoa:n=4,k=2#0"
        assert all(j.depth == 1 for j in jobs)

    def test_directory_jobs(self, test_config, qasm_dir):
        """Files are taken in sorted order and numbered as seeds."""
        runner = BenchRunner("lnn:4", ["linear"], test_config, depth=0)
        jobs = runner.directory_jobs(str(qasm_dir))
        assert [(j.seed, j.instance) for j in jobs] == [(0, "a.qasm"), (1, "b.qasm")]
        assert all(j.depth == 0 for j in jobs)

    def test_directory_errors(self, test_config, temp_dir):
        """Missing or empty directories are rejected."""
        runner = BenchRunner("lnn:4", ["swap"], test_config)
        with pytest.raises(ValueError, match="No .qasm files"):
            runner.directory_jobs(str(temp_dir))
        with pytest.raises(ValueError, match="is not a directory"):
            runner.directory_jobs(str(temp_dir / "missing"))

    def test_constructor_checks(self, test_config):
        """Methods, architecture and worker count are validated up front."""
        with pytest.raises(ValueError, match="At least one routing method"):
            BenchRunner("lnn:4", [], test_config)
        with pytest.raises(ValueError, match="Unknown routing method"):
            BenchRunner("lnn:4", ["sabre"], test_config)
        with pytest.raises(ArchitectureError):
            BenchRunner("ring:4", ["swap"], test_config)
        with pytest.raises(ValueError, match="Worker count"):
            BenchRunner("lnn:4", ["swap"], test_config, workers=0)

    @pytest.mark.asyncio
    async def test_run_inline(self, test_config):
        """Rows come back ordered by seed, then by method order."""
        methods = ["clifford+reorder", "swap"]
        runner = BenchRunner("lnn:4", methods, test_config)
        summary = await runner.run(runner.generator_jobs("qaoa:n=4,k=2", [1, 0]))

        assert [(r.seed, r.method) for r in summary.rows] == [
            (0, "clifford+reorder"),
            (0, "swap"),
            (1, "clifford+reorder"),
            (1, "swap"),
        ]
        assert [s.method for s in summary.summaries] == methods
        assert sum(s.best_share for s in summary.summaries) >= 1.0

    @pytest.mark.asyncio
    async def test_run_on_process_pool(self, test_config, qasm_dir):
        """A process pool gives the same rows as inline execution."""
        inline = BenchRunner("lnn:4", ["swap", "linear"], test_config, depth=0)
        pooled = BenchRunner("lnn:4", ["swap", "linear"], test_config, depth=0, workers=2)

        expected = await inline.run(inline.directory_jobs(str(qasm_dir)))
        actual = await pooled.run(pooled.directory_jobs(str(qasm_dir)))

        strip = [(r.seed, r.method, r.in_cnot, r.out_cnot) for r in expected.rows]
        assert [(r.seed, r.method, r.in_cnot, r.out_cnot) for r in actual.rows] == strip


class TestReports:
    """Test benchmark report files."""

    def test_csv_and_json(self, temp_dir):
        """CSV has a header row and blank overheads; JSON holds rows and summaries."""
        empty = row(1, "swap", 2).model_copy(update={"in_cnot": 0, "overhead_pct": None})
        rows = [row(0, "swap", 7), row(0, "clifford", 3), empty]
        summary = BenchSummary(rows=rows, summaries=summarize(rows, ["swap", "clifford"]))
        csv_path = temp_dir / "bench.csv"
        json_path = temp_dir / "bench.json"
        write_bench_csv(summary, csv_path)
        write_json(summary, json_path)

        with open(csv_path, newline="") as f:
            records = list(csv.DictReader(f))
        assert list(records[0].keys()) == BENCH_COLUMNS
        assert len(records) == 3
        assert records[2]["overhead_pct"] == ""

        data = json.loads(json_path.read_text())
        assert len(data["rows"]) == 3
        assert {s["method"] for s in data["summaries"]} == {"swap", "clifford"}
