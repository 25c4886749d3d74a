"""CLI commands for routing, circuit generation and benchmarking."""

import asyncio
import json
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import click
from lazyroute_common.circuit import Circuit
from lazyroute_common.errors import LazyRouteError
from lazyroute_common.gates import GateKind
from lazyroute_common.qasm import load_qasm, save_qasm
from lazyroute_core.arch import resolve_arch
from lazyroute_core.config import RouterConfig
from lazyroute_core.finalize import linear_fix
from lazyroute_core.finalize import sampling_fix as compute_sampling_fix
from lazyroute_core.routers import METHODS, parse_method, route as route_circuit
from lazyroute_core.synth import lower_pauli_rotation
from rich.console import Console
from rich.table import Table

from .bench import BenchRunner
from .generators import qaoa_maxklin2, random_pauli_sequence
from .logging_setup import setup_logging
from .reports import route_report, write_bench_csv, write_json

console = Console()


@contextmanager
def reported_errors():
    """Turn library failures into click errors with exit status 1."""
    try:
        yield
    except (LazyRouteError, ValueError) as e:
        raise click.ClickException(str(e))


def lower_rotations(circuit: Circuit) -> Circuit:
    """Replace Pauli-rotation gates by their ladder circuits so the result is plain QASM."""
    if not any(gate.kind is GateKind.PAULI_ROT for gate in circuit):
        return circuit
    gates = []
    for gate in circuit:
        if gate.kind is GateKind.PAULI_ROT:
            gates.extend(lower_pauli_rotation(gate.axis, gate.angle))
        else:
            gates.append(gate)
    return Circuit(circuit.n_qubits, gates)


def load_config(path: Optional[str]) -> RouterConfig:
    if path and Path(path).exists():
        return RouterConfig.from_file(path)
    return RouterConfig.from_env()


@click.group()
@click.option("--config", "config_path", default=None, help="Path to YAML configuration file")
@click.option("--log-level", default=None, help="Override the configured log level")
@click.pass_context
def cli(ctx, config_path, log_level):
    """Lazy-synthesis qubit routing."""
    ctx.ensure_object(dict)
    with reported_errors():
        config = load_config(config_path)
    if log_level:
        config.log_level = log_level

    errors = config.validate()
    if errors:
        raise click.UsageError("Invalid configuration: " + "; ".join(errors))

    setup_logging(config)
    ctx.obj["config"] = config


@cli.command()
@click.option("--in", "input_path", required=True, type=click.Path(), help="Input QASM file")
@click.option("--arch", required=True, help="Preset name or file:<path>")
@click.option("--method", required=True, type=click.Choice(METHODS), help="Routing method")
@click.option("--depth", type=int, default=None, help="Lookahead depth (default per method)")
@click.option("--merge", is_flag=True, help="Merge same-axis rotations (clifford only)")
@click.option("--reorder", is_flag=True, help="Reorder commuting rotations (clifford only)")
@click.option("--out", "output_path", required=True, type=click.Path(), help="Output QASM file")
@click.option("--report", "report_path", type=click.Path(), help="Write a JSON report")
@click.option("--verify", is_flag=True, help="Check equivalence with a dense simulation")
@click.option("--sampling-fix", is_flag=True, help="Make the output measurable as bit-strings")
@click.pass_context
def route(
    ctx,
    input_path,
    arch,
    method,
    depth,
    merge,
    reorder,
    output_path,
    report_path,
    verify,
    sampling_fix,
):
    """Route a circuit onto a coupling graph."""
    config: RouterConfig = ctx.obj["config"]
    base = parse_method(method)[0]
    if (merge or reorder) and base != "clifford":
        raise click.UsageError(f"--merge and --reorder only apply to clifford methods, not {base}")
    if depth is None:
        depth = config.depth_for(method)

    with reported_errors():
        circuit = load_qasm(input_path)
        graph = resolve_arch(arch)
        output = route_circuit(
            circuit,
            graph,
            method,
            depth=depth,
            merge=merge,
            reorder=reorder,
            count_mode=config.count_mode,
        )

    verified = None
    if verify:
        if graph.n_vertices > config.dense_cap:
            console.print(
                f"⚠️  Skipping verification: {graph.n_vertices} qubits exceed the dense cap "
                f"of {config.dense_cap}",
                style="yellow",
            )
        else:
            with reported_errors():
                verified = output.verify(tol=config.tolerance, cap=config.dense_cap)

    routed = output.circuit
    fix_model = None
    if sampling_fix:
        with reported_errors():
            if base == "clifford":
                c_diag, fix = compute_sampling_fix(
                    output.final_operator, graph=graph, depth=config.linear_depth
                )
                routed = routed + c_diag
            else:
                fix = linear_fix(output.final_operator)
        fix_model = fix.to_model()

    with reported_errors():
        save_qasm(lower_rotations(routed), output_path)
    report = route_report(output, arch, verified=verified, affine_fix=fix_model)
    if report_path:
        write_json(report, report_path)

    table = Table(title=f"Routed {Path(input_path).name} on {graph.name}")
    table.add_column("Method", style="cyan")
    table.add_column("Depth", style="blue")
    table.add_column("CNOT in", style="green")
    table.add_column("CNOT out", style="green")
    table.add_column("Overhead", style="yellow")
    table.add_column("Time (ms)", style="magenta")
    overhead = "n/a" if report.overhead_pct is None else f"{report.overhead_pct:.1f}%"
    table.add_row(
        report.method,
        str(report.depth),
        str(report.in_cnot),
        str(report.out_cnot),
        overhead,
        f"{report.wall_ms:.1f}",
    )
    console.print(table)
    console.print(f"✅ Wrote {output_path}", style="green")

    if verified is False:
        console.print("❌ Routed circuit is not equivalent to the input", style="red")
        ctx.exit(1)
    if verified:
        console.print("✅ Verified against the input circuit", style="green")


@cli.command()
@click.option("--arch", required=True, help="Preset name or file:<path>")
@click.option(
    "--methods",
    default="swap,clifford+reorder",
    show_default=True,
    help="Comma-separated routing methods",
)
@click.option("--generator", help="qaoa:n=..,k=.. or pauli:n=..,count=..")
@click.option("--qasm-dir", type=click.Path(), help="Directory of QASM instances")
@click.option("--seeds", default=5, show_default=True, help="Number of generator seeds")
@click.option("--seed-start", default=0, show_default=True, help="First generator seed")
@click.option("--depth", type=int, default=None, help="Lookahead depth for every method")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--csv", "csv_path", type=click.Path(), help="Write per-instance rows as CSV")
@click.option("--json", "json_path", type=click.Path(), help="Write rows and summaries as JSON")
@click.pass_context
def bench(
    ctx, arch, methods, generator, qasm_dir, seeds, seed_start, depth, workers, csv_path, json_path
):
    """Compare routing methods on generated or stored circuits."""
    if bool(generator) == bool(qasm_dir):
        raise click.UsageError("Pass exactly one of --generator or --qasm-dir")
    method_list: List[str] = [m.strip() for m in methods.split(",") if m.strip()]

    with reported_errors():
        runner = BenchRunner(arch, method_list, ctx.obj["config"], depth=depth, workers=workers)
        if generator:
            jobs = runner.generator_jobs(generator, range(seed_start, seed_start + seeds))
        else:
            jobs = runner.directory_jobs(qasm_dir)
        summary = asyncio.run(runner.run(jobs))

    if csv_path:
        write_bench_csv(summary, csv_path)
    if json_path:
        write_json(summary, json_path)

    table = Table(title=f"Benchmark on {arch} ({len(summary.rows)} runs)")
    table.add_column("Method", style="cyan")
    table.add_column("Instances", style="blue")
    table.add_column("Mean overhead", style="yellow")
    table.add_column("Mean CNOT out", style="green")
    table.add_column("Best share", style="magenta")
    for item in summary.summaries:
        overhead = "n/a" if item.mean_overhead_pct is None else f"{item.mean_overhead_pct:.1f}%"
        table.add_row(
            item.method,
            str(item.instances),
            overhead,
            f"{item.mean_out_cnot:.1f}",
            f"{100 * item.best_share:.0f}%",
        )
    console.print(table)


@cli.group()
def gen():
    """Generate benchmark circuits."""
    pass


@gen.command("qaoa")
@click.option("--n", "n_qubits", type=int, required=True, help="Number of qubits")
@click.option("--k", type=int, default=2, show_default=True, help="Parity hamming weight")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed")
@click.option(
    "--strict",
    is_flag=True,
    help="Fail instead of reusing parities when C(n,k) < n^2",
)
@click.option("--out", "output_path", required=True, type=click.Path(), help="Output QASM file")
def gen_qaoa(n_qubits, k, seed, strict, output_path):
    """QAOA circuit for a random MAX-k-LIN-2 instance with n^2 parity terms.

    Parities are distinct while C(n,k) >= n^2. Smaller pools are reshuffled and
    reused, so some parities repeat, unless --strict is given.
    """
    with reported_errors():
        circuit = qaoa_maxklin2(n_qubits, k, seed, strict=strict)
        save_qasm(circuit, output_path)
    console.print(
        f"✅ Wrote {output_path}: {len(circuit)} gates, {circuit.count_cnots()} CNOTs",
        style="green",
    )


@gen.command("pauli")
@click.option("--n", "n_qubits", type=int, required=True, help="Number of qubits")
@click.option("--count", type=int, required=True, help="Number of distinct rotations")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed")
@click.option("--out", "output_path", required=True, type=click.Path(), help="Output QASM file")
def gen_pauli(n_qubits, count, seed, output_path):
    """Sequence of rotations about distinct random Pauli axes."""
    with reported_errors():
        circuit = random_pauli_sequence(n_qubits, count, seed)
        save_qasm(circuit, output_path)
    console.print(
        f"✅ Wrote {output_path}: {len(circuit)} gates, {circuit.count_cnots()} CNOTs",
        style="green",
    )


@cli.group()
def config():
    """Inspect configuration."""
    pass


@config.command("show")
@click.pass_context
def config_show(ctx):
    """Print the resolved configuration."""
    console.print_json(json.dumps(ctx.obj["config"].to_dict()))
