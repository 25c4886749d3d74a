"""Rotation angles with an exact multiple-of-pi/4 form and a real fallback."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

CLIFFORD_TOLERANCE = 1e-12
HALF_PI = math.pi / 2


class Angle(ABC):
    """Common interface of :class:`Exact` and :class:`Real` angles."""

    @property
    @abstractmethod
    def radians(self) -> float:
        pass

    @abstractmethod
    def is_clifford(self) -> bool:
        """Whether a rotation by this angle is a Clifford operation."""
        pass

    @abstractmethod
    def quarter_turns(self) -> int:
        """Number of pi/2 steps (mod 4) of a Clifford angle."""
        pass

    def is_zero(self) -> bool:
        """Whether the angle is a multiple of 2*pi (identity rotation up to phase)."""
        return self.is_clifford() and self.quarter_turns() == 0

    def __add__(self, other: "Angle") -> "Angle":
        if isinstance(self, Exact) and isinstance(other, Exact):
            return Exact(self.k + other.k)
        if not isinstance(other, Angle):
            return NotImplemented
        return Real(self.radians + other.radians)

    @abstractmethod
    def __neg__(self) -> "Angle":
        pass

    def scaled(self, sign: int) -> "Angle":
        """Multiply by a sign in {+1, -1}."""
        return self if sign > 0 else -self

    @abstractmethod
    def to_qasm(self) -> str:
        """OpenQASM argument text that parses back to the same angle."""
        pass


@dataclass(frozen=True)
class Exact(Angle):
    """Angle ``k * pi / 4``; ``k`` keeps its full value across merges."""

    k: int

    @property
    def radians(self) -> float:
        return self.k * math.pi / 4

    def is_clifford(self) -> bool:
        return self.k % 2 == 0

    def quarter_turns(self) -> int:
        if not self.is_clifford():
            raise ValueError(f"Angle {self} is not a Clifford angle")
        return (self.k // 2) % 4

    def __neg__(self) -> "Exact":
        return Exact(-self.k)

    def to_qasm(self) -> str:
        if self.k == 0:
            return "0"
        frac = Fraction(self.k, 4)
        sign = "-" if frac < 0 else ""
        num, den = abs(frac.numerator), frac.denominator
        text = "pi" if num == 1 else f"{num}*pi"
        if den != 1:
            text = f"{text}/{den}"
        return sign + text

    def __str__(self) -> str:
        return self.to_qasm()


@dataclass(frozen=True)
class Real(Angle):
    """Angle given in radians."""

    value: float

    @property
    def radians(self) -> float:
        return self.value

    def is_clifford(self) -> bool:
        rem = math.fmod(self.value, HALF_PI)
        if rem < 0:
            rem += HALF_PI
        return rem < CLIFFORD_TOLERANCE or abs(rem - HALF_PI) < CLIFFORD_TOLERANCE

    def quarter_turns(self) -> int:
        if not self.is_clifford():
            raise ValueError(f"Angle {self} is not a Clifford angle")
        return round(self.value / HALF_PI) % 4

    def __neg__(self) -> "Real":
        return Real(-self.value)

    def to_qasm(self) -> str:
        return repr(float(self.value))

    def __str__(self) -> str:
        return self.to_qasm()


AngleLike = Union[Angle, int, float]


def as_angle(value: AngleLike) -> Angle:
    """Coerce ints to :class:`Exact` and floats to :class:`Real`."""
    if isinstance(value, Angle):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not an angle")
    if isinstance(value, int):
        return Exact(value)
    return Real(float(value))
