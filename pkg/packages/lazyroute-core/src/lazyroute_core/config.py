"""Configuration management for lazyroute."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import List

import yaml

DEFAULT_DENSE_CAP = 10
MAX_DENSE_CAP = 14
COUNT_MODES = ("cnot", "raw")
VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def default_dense_cap() -> int:
    """Dense verification width cap, overridable through ``LAZYROUTE_DENSE_CAP``."""
    return int(os.getenv("LAZYROUTE_DENSE_CAP", str(DEFAULT_DENSE_CAP)))


@dataclass
class RouterConfig:
    """Routing, verification and benchmark settings."""

    swap_depth: int = 4
    linear_depth: int = 3
    clifford_depth: int = 3
    count_mode: str = "cnot"

    dense_cap: int = DEFAULT_DENSE_CAP
    tolerance: float = 1e-9

    bench_workers: int = 1

    log_level: str = "INFO"
    structured_logging: bool = False

    def depth_for(self, method: str) -> int:
        """Default search depth for a method name (variants share the clifford depth)."""
        base = method.split("+", 1)[0]
        if base == "swap":
            return self.swap_depth
        if base == "linear":
            return self.linear_depth
        if base == "clifford":
            return self.clifford_depth
        raise ValueError(f"Unknown routing method: {method}")

    @classmethod
    def from_file(cls, config_path: str) -> "RouterConfig":
        """Load configuration from YAML file."""
        config_file = Path(config_path)

        if not config_file.exists():
            return cls()

        try:
            with open(config_file) as f:
                data = yaml.safe_load(f) or {}
        except Exception as e:
            raise ValueError(f"Failed to load config file {config_path}: {e}")

        routing_config = data.get("routing", {})
        depth_config = routing_config.get("depth", {})
        verify_config = data.get("verify", {})
        bench_config = data.get("bench", {})
        logging_config = data.get("logging", {})

        return cls(
            swap_depth=int(depth_config.get("swap", cls.swap_depth)),
            linear_depth=int(depth_config.get("linear", cls.linear_depth)),
            clifford_depth=int(depth_config.get("clifford", cls.clifford_depth)),
            count_mode=routing_config.get("countMode", cls.count_mode),
            dense_cap=int(
                os.getenv("LAZYROUTE_DENSE_CAP", verify_config.get("denseCap", cls.dense_cap))
            ),
            tolerance=float(verify_config.get("tolerance", cls.tolerance)),
            bench_workers=int(bench_config.get("workers", cls.bench_workers)),
            log_level=logging_config.get("level", cls.log_level),
            structured_logging=logging_config.get("structured", cls.structured_logging),
        )

    @classmethod
    def from_env(cls) -> "RouterConfig":
        """Load configuration from environment variables."""
        return cls(
            swap_depth=int(os.getenv("LAZYROUTE_SWAP_DEPTH", str(cls.swap_depth))),
            linear_depth=int(os.getenv("LAZYROUTE_LINEAR_DEPTH", str(cls.linear_depth))),
            clifford_depth=int(os.getenv("LAZYROUTE_CLIFFORD_DEPTH", str(cls.clifford_depth))),
            count_mode=os.getenv("LAZYROUTE_COUNT_MODE", cls.count_mode),
            dense_cap=default_dense_cap(),
            tolerance=float(os.getenv("LAZYROUTE_TOLERANCE", str(cls.tolerance))),
            bench_workers=int(os.getenv("LAZYROUTE_BENCH_WORKERS", str(cls.bench_workers))),
            log_level=os.getenv("LAZYROUTE_LOG_LEVEL", cls.log_level),
            structured_logging=os.getenv("LAZYROUTE_STRUCTURED_LOGGING", "false").lower()
            == "true",
        )

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []

        for name, depth in [
            ("swap_depth", self.swap_depth),
            ("linear_depth", self.linear_depth),
            ("clifford_depth", self.clifford_depth),
        ]:
            if depth < 0:
                errors.append(f"{name} must be non-negative: {depth}")

        if self.count_mode not in COUNT_MODES:
            errors.append(f"Invalid count_mode: {self.count_mode}")

        if not 1 <= self.dense_cap <= MAX_DENSE_CAP:
            errors.append(f"dense_cap must be between 1 and {MAX_DENSE_CAP}: {self.dense_cap}")

        if self.tolerance <= 0:
            errors.append(f"tolerance must be positive: {self.tolerance}")

        if self.bench_workers < 1:
            errors.append(f"bench_workers must be at least 1: {self.bench_workers}")

        if self.log_level.upper() not in VALID_LOG_LEVELS:
            errors.append(f"Invalid log_level: {self.log_level}")

        return errors

    def to_dict(self) -> dict:
        """Convert configuration to dictionary."""
        return {
            "routing": {
                "depth": {
                    "swap": self.swap_depth,
                    "linear": self.linear_depth,
                    "clifford": self.clifford_depth,
                },
                "countMode": self.count_mode,
            },
            "verify": {
                "denseCap": self.dense_cap,
                "tolerance": self.tolerance,
            },
            "bench": {
                "workers": self.bench_workers,
            },
            "logging": {
                "level": self.log_level,
                "structured": self.structured_logging,
            },
        }
