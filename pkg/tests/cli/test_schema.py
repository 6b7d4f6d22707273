# ruff: noqa: S101
import json
from pathlib import Path

import pytest

from cli.errors import OutputError, SchemaError
from cli.schema import db_to_linear, linear_to_db, load_run_config, parse_run_config, run_config_schema

from .sample import TWriteConfig, op_config


class TestParse:
    def test_valid(self) -> None:
        config = parse_run_config(json.dumps(op_config()))
        assert config.scenario == "op"
        assert config.system.irs_models()[0].effective_elements == 2
        assert config.gamma_th == pytest.approx(10**0.5)
        assert config.rhos == pytest.approx([1.0, 10.0, 100.0])

    def test_method_aliases(self) -> None:
        config = parse_run_config(json.dumps(op_config(methods=["exact", "exact_numeric", "upper_bound", "series"])))
        assert config.methods == ["exact_numeric", "upper", "exact_series"]

    def test_nested_numerics(self) -> None:
        config = parse_run_config(json.dumps(op_config(numerics={"series": {"order_I": 6}})))
        assert config.numerics.series.order_I == 6
        assert config.numerics.inversion.method == "dehoog"

    @pytest.mark.parametrize(
        "overrides",
        [
            {"unknown_key": 1},
            {"schema_version": 2},
            {"rho_grid_db": [10, 0]},
            {"gamma_th_db": None},
            {"methods": []},
            {"methods": ["oracle"]},
            {"scenario": "pdf", "points": []},
            {"scenario": "pdf", "points": [1.0], "rho_grid_db": [0, 10]},
            {"numerics": {"inversion": {"method": "talbot"}}},
        ],
        ids=[
            "unknown-key",
            "version",
            "decreasing-grid",
            "no-threshold",
            "no-methods",
            "bad-method",
            "pdf-points",
            "pdf-grid",
            "talbot",
        ],
    )
    def test_rejected(self, overrides: dict) -> None:
        with pytest.raises(SchemaError):
            parse_run_config(json.dumps(op_config(**overrides)))

    def test_invalid_json(self) -> None:
        with pytest.raises(SchemaError, match="not valid JSON"):
            parse_run_config("{")

    def test_shape_order_enforced(self) -> None:
        system = {"elements": [2], "source_irs": {"m": 1, "omega": 1}, "irs_destination": {"m": 2, "omega": 2}}
        with pytest.raises(SchemaError, match="must not be below"):
            parse_run_config(json.dumps(op_config(system=system)))


class TestLoad:
    @pytest.mark.asyncio
    async def test_from_file(self, write_config: TWriteConfig) -> None:
        config = await load_run_config(str(write_config(op_config())))
        assert config.methods[0] == "exact_numeric"

    @pytest.mark.asyncio
    async def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(OutputError):
            await load_run_config(str(tmp_path / "missing.json"))


def test_decibels() -> None:
    assert db_to_linear(20) == pytest.approx(100)
    assert linear_to_db(1000) == pytest.approx(30)


def test_schema_lists_scenarios() -> None:
    schema = run_config_schema()
    assert "scenario" in schema["properties"]
    assert "system" in schema["required"]
