"""Run configuration read from JSON. `docs/config_schema.md` describes every field."""

import json
import logging
import math
from typing import Any, Literal

import aiofiles
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, ValidationError, field_validator, model_validator

from lib.configs import EvaluationSettings, McConfig
from lib.irs import IrsModel, ModulationSpec, TModulationName
from lib.nakagami import NakagamiParams

from .errors import OutputError, SchemaError

logger = logging.getLogger(__name__)

TScenario = Literal["pdf", "op", "aser", "mgf", "diversity"]
TMethodName = Literal["exact_series", "exact_numeric", "upper", "clt", "gamma", "mc"]

_METHOD_ALIASES = {"exact": "exact_numeric", "upper_bound": "upper", "series": "exact_series"}


def db_to_linear(value_db: float) -> float:
    return 10 ** (value_db / 10)


def linear_to_db(value: float) -> float:
    return 10 * math.log10(value)


class SystemBlock(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    elements: list[PositiveInt] = Field(min_length=1, description="Values of N to sweep")
    antennas: PositiveInt = 1
    source_irs: NakagamiParams
    irs_destination: NakagamiParams
    direct: NakagamiParams | None = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "SystemBlock":
        if self.source_irs.m < self.irs_destination.m:
            msg = f"m_SI={self.source_irs.m:g} must not be below m_ID={self.irs_destination.m:g}"
            raise ValueError(msg)
        return self

    def irs_models(self) -> list[IrsModel]:
        return [
            IrsModel(
                elements=n,
                antennas=self.antennas,
                source_irs=self.source_irs,
                irs_destination=self.irs_destination,
                direct=self.direct,
            )
            for n in self.elements
        ]


class ModulationBlock(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: TModulationName = "bpsk"
    order: PositiveInt = 2

    def to_spec(self) -> ModulationSpec:
        return ModulationSpec.from_name(self.name, self.order)


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    schema_version: Literal[1]
    scenario: TScenario
    system: SystemBlock
    methods: list[TMethodName] = Field(min_length=1)
    rho_grid_db: list[float] = Field(default_factory=list)
    gamma_th_db: float | None = None
    points: list[float] = Field(default_factory=list, description="SNR abscissae (pdf) or s values (mgf)")
    modulation: ModulationBlock = ModulationBlock()
    numerics: EvaluationSettings = EvaluationSettings()
    monte_carlo: McConfig = McConfig()
    regime_threshold: float = Field(default=1e-3, gt=0, lt=1)

    @field_validator("methods", mode="before")
    @classmethod
    def _resolve_aliases(cls, value: Any) -> Any:
        if isinstance(value, list):
            return list(dict.fromkeys(_METHOD_ALIASES.get(v, v) if isinstance(v, str) else v for v in value))
        return value

    @field_validator("rho_grid_db")
    @classmethod
    def _increasing(cls, value: list[float]) -> list[float]:
        if any(b <= a for a, b in zip(value, value[1:], strict=False)):
            msg = "rho_grid_db must be strictly increasing"
            raise ValueError(msg)
        return value

    @model_validator(mode="after")
    def _scenario_inputs(self) -> "RunConfig":
        needs_grid = self.scenario in ("op", "aser", "diversity")
        if needs_grid and not self.rho_grid_db:
            msg = f"scenario {self.scenario!r} needs rho_grid_db"
            raise ValueError(msg)
        if self.scenario in ("op", "diversity") and self.gamma_th_db is None:
            msg = f"scenario {self.scenario!r} needs gamma_th_db"
            raise ValueError(msg)
        if self.scenario == "pdf" and len(self.rho_grid_db) != 1:
            msg = "scenario 'pdf' needs exactly one rho_grid_db value"
            raise ValueError(msg)
        if self.scenario in ("pdf", "mgf") and (not self.points or min(self.points) <= 0):
            msg = f"scenario {self.scenario!r} needs positive points"
            raise ValueError(msg)
        return self

    @property
    def rhos(self) -> list[float]:
        return [db_to_linear(v) for v in self.rho_grid_db]

    @property
    def gamma_th(self) -> float | None:
        return None if self.gamma_th_db is None else db_to_linear(self.gamma_th_db)


def parse_run_config(text: str) -> RunConfig:
    try:
        return RunConfig.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise SchemaError(f"config is not valid JSON: {e}") from e
    except ValidationError as e:
        raise SchemaError(f"config does not match schema version 1:\n{e}") from e


async def load_run_config(path: str) -> RunConfig:
    try:
        async with aiofiles.open(path, encoding="utf-8") as f:
            text = await f.read()
    except OSError as e:
        raise OutputError(f"cannot read config {path}: {e}") from e
    config = parse_run_config(text)
    logger.info(f"Loaded {config.scenario} config with methods {config.methods} from {path}")
    return config


def run_config_schema() -> dict[str, Any]:
    return RunConfig.model_json_schema()
