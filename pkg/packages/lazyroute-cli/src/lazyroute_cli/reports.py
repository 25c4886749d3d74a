"""Route and benchmark report emission."""

import csv
from pathlib import Path
from typing import Optional, Union

from lazyroute_common.models import AffineFixModel, BenchSummary, RouteReport, overhead_pct
from lazyroute_core.routers import RoutedOutput

BENCH_COLUMNS = [
    "seed",
    "instance",
    "method",
    "arch",
    "depth",
    "in_cnot",
    "out_cnot",
    "overhead_pct",
    "wall_ms",
]


def route_report(
    output: RoutedOutput,
    arch: str,
    verified: Optional[bool] = None,
    affine_fix: Optional[AffineFixModel] = None,
) -> RouteReport:
    counts = output.counts
    return RouteReport(
        method=output.method,
        arch=arch,
        depth=output.depth,
        n_qubits=output.circuit.n_qubits,
        in_cnot=counts["in_cnot"],
        out_cnot=counts["out_cnot"],
        in_2q=counts["in_2q"],
        out_2q=counts["out_2q"],
        overhead_pct=overhead_pct(counts["in_cnot"], counts["out_cnot"]),
        wall_ms=output.wall_ms,
        final_operator=output.final_operator_model(),
        verified=verified,
        affine_fix=affine_fix,
        counts=dict(counts),
    )


def write_json(model: Union[RouteReport, BenchSummary], path: Union[str, Path]) -> None:
    Path(path).write_text(model.model_dump_json(indent=2), encoding="utf-8")


def write_bench_csv(summary: BenchSummary, path: Union[str, Path]) -> None:
    """One row per (instance, method) with a header row."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for row in summary.rows:
            record = row.model_dump()
            if record["overhead_pct"] is None:
                record["overhead_pct"] = ""
            writer.writerow(record)
