"""Benchmark circuit generators: QAOA for MAX-k-LIN-2 and random Pauli-rotation sequences."""

import logging
import math
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np
from lazyroute_common.angles import Real
from lazyroute_common.circuit import Circuit
from lazyroute_common.gates import Gate, GateKind
from lazyroute_common.paulistring import PauliString
from lazyroute_core.synth import lower_pauli_rotation

logger = logging.getLogger(__name__)

CLIFFORD_BAND = 1e-6
POOL_ENUMERATION_LIMIT = 100_000
PAULI_LETTERS = "IXYZ"

_SPEC_RE = re.compile(r"^(qaoa|pauli):(.*)$")


def random_angle(rng: np.random.Generator) -> Real:
    """Uniform angle in (0, pi/2) kept out of a band around the Clifford angles."""
    return Real(float(rng.uniform(CLIFFORD_BAND, math.pi / 2 - CLIFFORD_BAND)))


def parity_block(parity: Tuple[int, ...], angle) -> List[Gate]:
    """CNOT ladder onto the last qubit, ``Rz`` there, then the ladder reversed."""
    ladder = [Gate.cnot(a, b) for a, b in zip(parity, parity[1:])]
    return ladder + [Gate.rz(parity[-1], angle)] + list(reversed(ladder))


def draw_parities(
    n: int, k: int, count: int, rng: np.random.Generator, strict: bool = False
) -> List[Tuple[int, ...]]:
    """``count`` weight-``k`` parities, distinct until the pool of all of them runs out.

    Raises:
        ValueError: If ``strict`` and fewer than ``count`` distinct parities exist.
    """
    pool_size = math.comb(n, k)
    if count > pool_size and strict:
        raise ValueError(
            f"Only {pool_size} distinct weight-{k} parities on {n} qubits, need {count}"
        )

    if pool_size <= POOL_ENUMERATION_LIMIT:
        pool = list(combinations(range(n), k))
        drawn: List[Tuple[int, ...]] = []
        while len(drawn) < count:
            order = rng.permutation(len(pool))
            drawn.extend(pool[i] for i in order[: count - len(drawn)])
        return drawn

    seen: Set[Tuple[int, ...]] = set()
    drawn = []
    while len(drawn) < count:
        parity = tuple(sorted(int(q) for q in rng.choice(n, size=k, replace=False)))
        if parity not in seen:
            seen.add(parity)
            drawn.append(parity)
    return drawn


def qaoa_maxklin2(n: int, k: int, seed: int, strict: bool = False) -> Circuit:
    """One QAOA layer for a random MAX-k-LIN-2 instance with ``n**2`` parity terms.

    The circuit is a Hadamard layer, one parity block per term with a random angle, and a
    final layer of ``X`` rotations written as ``H Rz H`` on every qubit.

    Raises:
        ValueError: If ``k`` is outside ``2..n``, or the pool is too small under ``strict``.
    """
    if not 2 <= k <= n:
        raise ValueError(f"Hamming weight k must lie in 2..{n}: {k}")

    rng = np.random.default_rng(seed)
    gates = [Gate.of(GateKind.H, q) for q in range(n)]
    for parity in draw_parities(n, k, n * n, rng, strict=strict):
        gates.extend(parity_block(parity, random_angle(rng)))
    for q in range(n):
        gates.extend(
            [Gate.of(GateKind.H, q), Gate.rz(q, random_angle(rng)), Gate.of(GateKind.H, q)]
        )

    logger.debug(f"Generated QAOA MAX-{k}-LIN-2 on {n} qubits (seed {seed}): {len(gates)} gates")
    return Circuit(n, gates)


def random_axes(n: int, count: int, rng: np.random.Generator) -> List[PauliString]:
    """Distinct random non-identity Pauli strings.

    Raises:
        ValueError: If ``count`` is not positive or exceeds ``4**n - 1``.
    """
    budget = 4**n - 1
    if count < 1:
        raise ValueError(f"Rotation count must be at least 1: {count}")
    if count > budget:
        raise ValueError(f"Only {budget} distinct non-identity axes on {n} qubits, need {count}")

    seen: Set[str] = set()
    axes = []
    while len(axes) < count:
        letters = "".join(PAULI_LETTERS[i] for i in rng.integers(0, 4, size=n))
        if letters in seen or set(letters) == {"I"}:
            continue
        seen.add(letters)
        axes.append(PauliString(letters))
    return axes


def random_pauli_sequence(n: int, count: int, seed: int, lowered: bool = True) -> Circuit:
    """``count`` rotations about distinct random axes with non-Clifford angles.

    With ``lowered`` each rotation is written as its unconstrained ladder circuit; otherwise
    the circuit keeps the Pauli rotations as single gates.
    """
    rng = np.random.default_rng(seed)
    gates: List[Gate] = []
    for axis in random_axes(n, count, rng):
        angle = random_angle(rng)
        if lowered:
            gates.extend(lower_pauli_rotation(axis, angle))
        else:
            gates.append(Gate.pauli_rot(axis, angle))
    logger.debug(f"Generated {count} Pauli rotations on {n} qubits (seed {seed})")
    return Circuit(n, gates)


@dataclass
class GeneratorSpec:
    """Parsed ``qaoa:n=..,k=..`` or ``pauli:n=..,count=..`` generator reference."""

    kind: str
    params: Dict[str, int] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        match = _SPEC_RE.match(text.strip())
        if not match:
            raise ValueError(
                f"Unknown generator {text!r}; use qaoa:n=..,k=.. or pauli:n=..,count=.."
            )
        kind, body = match.groups()
        params = {}
        for item in filter(None, (part.strip() for part in body.split(","))):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"Malformed generator parameter {item!r}")
            try:
                params[key.strip()] = int(value)
            except ValueError:
                raise ValueError(f"Generator parameter {key.strip()} must be an integer: {value}")

        required = {"qaoa": ("n", "k"), "pauli": ("n", "count")}[kind]
        missing = [key for key in required if key not in params]
        if missing:
            raise ValueError(f"Generator {kind} is missing {', '.join(missing)}")
        return cls(kind, params)

    @property
    def n_qubits(self) -> int:
        return self.params["n"]

    def label(self) -> str:
        return f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in self.params.items())

    def build(self, seed: int) -> Circuit:
        builder = GENERATORS[self.kind]
        return builder(self.params, seed)


GENERATORS: Dict[str, Callable[[Dict[str, int], int], Circuit]] = {
    "qaoa": lambda p, seed: qaoa_maxklin2(p["n"], p["k"], seed, strict=bool(p.get("strict", 0))),
    "pauli": lambda p, seed: random_pauli_sequence(p["n"], p["count"], seed),
}


def generate(spec: str, seed: int, n_qubits: Optional[int] = None) -> Circuit:
    """Build a circuit from a generator reference, optionally widened to ``n_qubits``."""
    circuit = GeneratorSpec.parse(spec).build(seed)
    return circuit if n_qubits is None else circuit.widened(n_qubits)
