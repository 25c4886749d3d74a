"""Report models written by the route and bench commands."""

from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel


def overhead_pct(in_cnot: int, out_cnot: int) -> Optional[float]:
    """Relative CNOT overhead in percent; None when the input has no CNOTs but the output does."""
    if in_cnot == 0:
        return 0.0 if out_cnot == 0 else None
    return 100.0 * (out_cnot - in_cnot) / in_cnot


class FinalOperatorModel(BaseModel):
    """Residual final operator of a routing run."""

    kind: Literal["permutation", "linear", "tableau"]
    data: Union[List[int], List[str]]


class AffineFixModel(BaseModel):
    """Classical bit-string correction ``w' = L w + b``."""

    L: List[str]
    b: str


class RouteReport(BaseModel):
    """Result of routing one circuit."""

    method: str
    arch: str
    depth: int
    n_qubits: int
    in_cnot: int
    out_cnot: int
    in_2q: int
    out_2q: int
    overhead_pct: Optional[float]
    wall_ms: float
    final_operator: FinalOperatorModel
    verified: Optional[bool] = None
    affine_fix: Optional[AffineFixModel] = None
    counts: Dict[str, int] = {}


class BenchRow(BaseModel):
    """One (instance, method) benchmark measurement."""

    seed: int
    instance: str
    method: str
    arch: str
    depth: int
    in_cnot: int
    out_cnot: int
    overhead_pct: Optional[float]
    wall_ms: float


class MethodSummary(BaseModel):
    """Aggregate over all instances routed with one method."""

    method: str
    instances: int
    mean_overhead_pct: Optional[float]
    mean_out_cnot: float
    best_share: float


class BenchSummary(BaseModel):
    """Full benchmark output."""

    rows: List[BenchRow]
    summaries: List[MethodSummary]
