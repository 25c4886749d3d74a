"""Benchmark runner: route generated or QASM instances with several methods and compare."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from statistics import mean
from typing import Dict, List, Optional, Sequence

from lazyroute_common.circuit import Circuit
from lazyroute_common.models import BenchRow, BenchSummary, MethodSummary, overhead_pct
from lazyroute_common.qasm import load_qasm
from lazyroute_core.arch import resolve_arch
from lazyroute_core.config import RouterConfig
from lazyroute_core.routers import parse_method, route

from .generators import GeneratorSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchJob:
    """One routing run; plain data so it can cross a process boundary."""

    seed: int
    instance: str
    method: str
    arch: str
    depth: int
    count_mode: str = "cnot"
    generator: Optional[str] = None
    path: Optional[str] = None

    def circuit(self) -> Circuit:
        if self.generator is not None:
            return GeneratorSpec.parse(self.generator).build(self.seed)
        if self.path is None:
            raise ValueError(f"Job {self.instance} has neither a generator nor a QASM path")
        return load_qasm(self.path)


def run_job(job: BenchJob) -> BenchRow:
    """Route one instance; module level so process pools can pickle it."""
    graph = resolve_arch(job.arch)
    output = route(job.circuit(), graph, job.method, depth=job.depth, count_mode=job.count_mode)
    in_cnot, out_cnot = output.counts["in_cnot"], output.counts["out_cnot"]
    return BenchRow(
        seed=job.seed,
        instance=job.instance,
        method=output.method,
        arch=job.arch,
        depth=job.depth,
        in_cnot=in_cnot,
        out_cnot=out_cnot,
        overhead_pct=overhead_pct(in_cnot, out_cnot),
        wall_ms=output.wall_ms,
    )


def summarize(rows: Sequence[BenchRow], methods: Sequence[str]) -> List[MethodSummary]:
    """Per-method means and the share of instances where each method has the fewest CNOTs."""
    by_seed: Dict[int, List[BenchRow]] = {}
    for row in rows:
        by_seed.setdefault(row.seed, []).append(row)
    best = {seed: min(r.out_cnot for r in group) for seed, group in by_seed.items()}

    summaries = []
    for method in methods:
        mine = [r for r in rows if r.method == method]
        if not mine:
            continue
        overheads = [r.overhead_pct for r in mine if r.overhead_pct is not None]
        wins = sum(1 for r in mine if r.out_cnot == best[r.seed])
        summaries.append(
            MethodSummary(
                method=method,
                instances=len(mine),
                mean_overhead_pct=mean(overheads) if overheads else None,
                mean_out_cnot=mean(r.out_cnot for r in mine),
                best_share=wins / len(mine),
            )
        )
    return summaries


class BenchRunner:
    """Expand (instance x method) jobs and run them inline or on a process pool."""

    def __init__(
        self,
        arch: str,
        methods: Sequence[str],
        config: Optional[RouterConfig] = None,
        depth: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        if not methods:
            raise ValueError("At least one routing method is required")
        for method in methods:
            parse_method(method)
        resolve_arch(arch)

        self.arch = arch
        self.methods = list(methods)
        self.config = config or RouterConfig()
        self.depth = depth
        self.workers = workers if workers is not None else self.config.bench_workers
        if self.workers < 1:
            raise ValueError(f"Worker count must be at least 1: {self.workers}")
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def _depth(self, method: str) -> int:
        return self.depth if self.depth is not None else self.config.depth_for(method)

    def generator_jobs(self, generator: str, seeds: Sequence[int]) -> List[BenchJob]:
        spec = GeneratorSpec.parse(generator)
        return [
            BenchJob(
                seed=seed,
                instance=f"{spec.label()}#{seed}",
                method=method,
                arch=self.arch,
                depth=self._depth(method),
                count_mode=self.config.count_mode,
                generator=generator,
            )
            for seed in seeds
            for method in self.methods
        ]

    def directory_jobs(self, directory: str) -> List[BenchJob]:
        """Jobs for every ``*.qasm`` file; the file's sorted position is its seed.

        Raises:
            ValueError: If the directory is missing or holds no QASM files.
        """
        root = Path(directory)
        if not root.is_dir():
            raise ValueError(f"Benchmark input {directory} is not a directory")
        files = sorted(root.glob("*.qasm"))
        if not files:
            raise ValueError(f"No .qasm files in {directory}")
        return [
            BenchJob(
                seed=index,
                instance=path.name,
                method=method,
                arch=self.arch,
                depth=self._depth(method),
                count_mode=self.config.count_mode,
                path=str(path),
            )
            for index, path in enumerate(files)
            for method in self.methods
        ]

    async def run(self, jobs: Sequence[BenchJob]) -> BenchSummary:
        """Run every job; rows come back ordered by (seed, method) whatever the finish order."""
        self.logger.info(
            f"Running {len(jobs)} routing jobs on {self.arch} with {self.workers} workers"
        )

        if self.workers > 1:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                rows = await asyncio.gather(
                    *(loop.run_in_executor(pool, run_job, job) for job in jobs)
                )
        else:
            rows = []
            for job in jobs:
                rows.append(run_job(job))
                await asyncio.sleep(0)

        order = {method: index for index, method in enumerate(self.methods)}
        rows = sorted(rows, key=lambda row: (row.seed, order[row.method]))
        summaries = summarize(rows, self.methods)
        return BenchSummary(rows=list(rows), summaries=summaries)
