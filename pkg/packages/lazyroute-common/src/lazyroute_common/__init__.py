"""Circuit IR, Pauli strings and OpenQASM I/O shared by lazyroute packages."""

__version__ = "0.0.1"

from .angles import Angle, Exact, Real, as_angle
from .circuit import Circuit, CountMode, count_cnots
from .errors import (
    ArchitectureError,
    InadmissibleGateError,
    LazyRouteError,
    QasmError,
    TableauError,
    VerificationError,
)
from .gates import Gate, GateKind
from .paulistring import PauliString
from .qasm import emit_qasm, load_qasm, parse_qasm, save_qasm
from .registry import MethodRegistry, routing_method

__all__ = [
    "Angle",
    "Exact",
    "Real",
    "as_angle",
    "Circuit",
    "CountMode",
    "count_cnots",
    "Gate",
    "GateKind",
    "PauliString",
    "parse_qasm",
    "emit_qasm",
    "load_qasm",
    "save_qasm",
    "MethodRegistry",
    "routing_method",
    "LazyRouteError",
    "QasmError",
    "InadmissibleGateError",
    "ArchitectureError",
    "TableauError",
    "VerificationError",
]
