"""Exception types shared by the lazyroute packages."""

from typing import Optional


class LazyRouteError(Exception):
    """Base class for lazyroute failures."""

    pass


class QasmError(LazyRouteError, ValueError):
    """Raised when OpenQASM text cannot be parsed or emitted."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InadmissibleGateError(LazyRouteError, ValueError):
    """Raised when a gate is outside the input gate set of a routing method."""

    pass


class ArchitectureError(LazyRouteError, ValueError):
    """Raised for unknown presets, malformed graph files and disconnected graphs."""

    pass


class TableauError(LazyRouteError, RuntimeError):
    """Raised when a Clifford tableau operation breaks its invariants."""

    pass


class VerificationError(LazyRouteError, RuntimeError):
    """Raised when a dense check cannot be performed."""

    pass
