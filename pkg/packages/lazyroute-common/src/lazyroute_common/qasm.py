"""OpenQASM 2.0 subset reader and writer."""

import ast
import logging
import math
import operator
import re
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from .angles import Angle, Exact, Real
from .circuit import Circuit
from .errors import QasmError
from .gates import Gate, GateKind

logger = logging.getLogger(__name__)

SUPPORTED_GATES = {
    kind.value: kind for kind in GateKind if kind is not GateKind.PAULI_ROT
}
IGNORED_STATEMENTS = ("OPENQASM", "include", "creg", "barrier")

_QREG_RE = re.compile(r"^qreg\s+([A-Za-z_][A-Za-z0-9_]*)\s*\[\s*(\d+)\s*\]$")
_GATE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*(?:\(([^()]*)\))?\s*(.*)$")
_OPERAND_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*\[\s*(\d+)\s*\]$")
_PI_RE = re.compile(
    r"^(?P<sign>[-+]?)\s*(?:(?P<num>\d+)\s*\*\s*)?pi"
    r"(?:\s*\*\s*(?P<mul>\d+))?(?:\s*/\s*(?P<den>\d+))?$"
)

_BINARY_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _split_statements(text: str) -> Iterator[Tuple[int, str]]:
    """Yield ``(line, statement)`` pairs with comments removed."""
    pending: List[str] = []
    start: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0]
        while line:
            head, sep, line = line.partition(";")
            if head.strip() and start is None:
                start = lineno
            pending.append(head)
            if not sep:
                break
            statement = " ".join(pending).strip()
            if statement:
                yield start, statement
            pending, start = [], None
    if "".join(pending).strip():
        raise QasmError("missing ';' at end of statement", start)


def _eval_expression(expr: str, line: int) -> float:
    def _eval(node):
        if isinstance(node, ast.Expression):
            return _eval(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            value = _eval(node.operand)
            return -value if isinstance(node.op, ast.USub) else value
        if isinstance(node, ast.BinOp) and type(node.op) in _BINARY_OPS:
            return _BINARY_OPS[type(node.op)](_eval(node.left), _eval(node.right))
        raise QasmError(f"unsupported angle expression {expr!r}", line)

    try:
        return _eval(ast.parse(expr, mode="eval"))
    except SyntaxError:
        raise QasmError(f"invalid angle expression {expr!r}", line)
    except ZeroDivisionError:
        raise QasmError(f"division by zero in angle {expr!r}", line)


def parse_angle(expr: str, line: int = 0) -> Angle:
    """Parse an rz argument; ``k*pi/m`` becomes Exact when it is a whole multiple of pi/4."""
    text = expr.strip()
    if text == "0":
        return Exact(0)

    match = _PI_RE.match(text)
    if match:
        k = int(match.group("num") or 1) * int(match.group("mul") or 1)
        m = int(match.group("den") or 1)
        if m == 0:
            raise QasmError(f"division by zero in angle {expr!r}", line)
        sign = -1 if match.group("sign") == "-" else 1
        if (4 * k) % m == 0:
            return Exact(sign * 4 * k // m)
        return Real(sign * k * math.pi / m)

    try:
        return Real(float(text))
    except ValueError:
        return Real(_eval_expression(text, line))


def parse_qasm(text: str) -> Circuit:
    """Parse OpenQASM 2.0 source restricted to the supported gate set."""
    register: Optional[str] = None
    n_qubits = 0
    gates: List[Gate] = []

    for line, statement in _split_statements(text):
        if statement.startswith(IGNORED_STATEMENTS):
            continue

        qreg = _QREG_RE.match(statement)
        if qreg:
            if register is not None:
                raise QasmError("only one quantum register is supported", line)
            register, n_qubits = qreg.group(1), int(qreg.group(2))
            if n_qubits < 1:
                raise QasmError("quantum register must hold at least one qubit", line)
            continue
        if statement.startswith("qreg"):
            raise QasmError(f"malformed register declaration {statement!r}", line)

        match = _GATE_RE.match(statement)
        if not match:
            raise QasmError(f"syntax error in {statement!r}", line)
        name, params, operand_text = match.groups()
        kind = SUPPORTED_GATES.get(name)
        if kind is None:
            raise QasmError(f"unsupported gate {name!r}", line)
        if register is None:
            raise QasmError(f"gate {name!r} before qreg declaration", line)

        qubits = []
        for operand in operand_text.split(","):
            op_match = _OPERAND_RE.match(operand.strip())
            if not op_match:
                raise QasmError(f"malformed operand {operand.strip()!r}", line)
            if op_match.group(1) != register:
                raise QasmError(f"unknown register {op_match.group(1)!r}", line)
            index = int(op_match.group(2))
            if index >= n_qubits:
                raise QasmError(f"qubit {index} out of range for register of {n_qubits}", line)
            qubits.append(index)

        if (kind is GateKind.RZ) != (params is not None):
            raise QasmError(f"gate {name!r} has a wrong parameter list", line)
        try:
            if kind is GateKind.RZ:
                gates.append(Gate(kind, tuple(qubits), angle=parse_angle(params, line)))
            else:
                gates.append(Gate(kind, tuple(qubits)))
        except ValueError as e:
            if isinstance(e, QasmError):
                raise
            raise QasmError(str(e), line)

    if register is None:
        raise QasmError("no quantum register declared")

    logger.debug(f"Parsed {len(gates)} gates on {n_qubits} qubits")
    return Circuit(n_qubits, gates)


def emit_qasm(circuit: Circuit, register: str = "q") -> str:
    """Write a circuit as OpenQASM 2.0; Pauli rotations must be lowered first."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg {register}[{circuit.n_qubits}];"]
    for index, gate in enumerate(circuit.gates):
        if gate.kind is GateKind.PAULI_ROT:
            raise QasmError(f"gate {index} is a Pauli rotation; lower it before emission")
        operands = ",".join(f"{register}[{q}]" for q in gate.qubits)
        if gate.angle is not None:
            lines.append(f"{gate.kind.value}({gate.angle.to_qasm()}) {operands};")
        else:
            lines.append(f"{gate.kind.value} {operands};")
    return "\n".join(lines) + "\n"


def load_qasm(path: Union[str, Path]) -> Circuit:
    """Read and parse a QASM file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise QasmError(f"cannot read {path}: {e}")
    return parse_qasm(text)


def save_qasm(circuit: Circuit, path: Union[str, Path]) -> None:
    Path(path).write_text(emit_qasm(circuit), encoding="utf-8")
