"""Tests for report models, errors and the method registry."""

import pytest
from lazyroute_common.errors import (
    ArchitectureError,
    InadmissibleGateError,
    LazyRouteError,
    QasmError,
    TableauError,
)
from lazyroute_common.models import FinalOperatorModel, RouteReport, overhead_pct
from lazyroute_common.registry import MethodRegistry, routing_method


class TestOverhead:
    """Test the overhead metric."""

    def test_relative_overhead(self):
        """Overhead is 100 (out - in) / in."""
        assert overhead_pct(10, 15) == 50.0
        assert overhead_pct(4, 4) == 0.0

    def test_zero_input(self):
        """No CNOTs in and out is zero overhead; CNOTs from nothing have none defined."""
        assert overhead_pct(0, 0) == 0.0
        assert overhead_pct(0, 3) is None


class TestRouteReport:
    """Test the route report model."""

    def test_json_dump(self):
        """Reports serialize with the final operator nested."""
        report = RouteReport(
            method="swap",
            arch="lnn:3",
            depth=2,
            n_qubits=3,
            in_cnot=1,
            out_cnot=4,
            in_2q=1,
            out_2q=2,
            overhead_pct=300.0,
            wall_ms=1.5,
            final_operator=FinalOperatorModel(kind="permutation", data=[1, 0, 2]),
        )
        text = report.model_dump_json(indent=2)
        assert '"kind": "permutation"' in text
        assert '"verified": null' in text


class TestErrors:
    """Test the error hierarchy."""

    def test_hierarchy(self):
        """Library errors share a base and keep builtin parents."""
        for cls in (QasmError, InadmissibleGateError, ArchitectureError):
            assert issubclass(cls, LazyRouteError)
            assert issubclass(cls, ValueError)
        assert issubclass(TableauError, RuntimeError)

    def test_qasm_error_line(self):
        """QASM errors prefix their line."""
        err = QasmError("boom", line=7)
        assert str(err) == "line 7: boom"
        assert QasmError("plain").line is None


class TestMethodRegistry:
    """Test router registration."""

    def test_register_and_lookup(self):
        """Decorated classes register under their method name."""

        def check(circuit):
            return None

        @routing_method("toy", validate=check)
        class ToyRouter:
            pass

        registry = MethodRegistry()
        registry.register(ToyRouter)
        assert registry.get_router("toy") is ToyRouter
        assert registry.get_validator("toy") is check
        assert registry.list_methods() == ["toy"]
        assert registry.get_router("other") is None

    def test_undecorated_rejected(self):
        """Only decorated classes can be registered."""

        class Plain:
            pass

        with pytest.raises(ValueError, match="not decorated"):
            MethodRegistry().register(Plain)
