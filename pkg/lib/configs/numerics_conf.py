from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

TInversionMethod = Literal["talbot", "dehoog"]


class MellinBarnesConfig(BaseModel):
    """Trapezoid evaluation of a Mellin-Barnes line integral."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    node_count: int = Field(default=256, ge=32, description="Initial trapezoid nodes on the truncated line")
    contour_shift: float | None = Field(default=None, description="Real part of the line; automatic when None")
    truncation_height: float = Field(default=40.0, gt=0, description="Half length of the truncated line")
    rel_tol: float = Field(default=1e-9, gt=0, lt=1e-2)
    max_refinements: int = Field(default=10, ge=1, le=20)


class InvLaplaceConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    method_order: int = Field(default=24, ge=16, description="Talbot nodes or de Hoog half series length")
    scale_hint: float = Field(default=1.0, gt=0, description="Multiplier on t when placing the contour")
    method: TInversionMethod = "dehoog"
    rel_tol: float = Field(default=1e-6, gt=0, description="Agreement required between two orders")
    abs_tol: float = Field(default=1e-12, ge=0)
    dehoog_tol: float = Field(default=1e-12, gt=0, lt=1e-3, description="Damping target of the de Hoog series")


class SeriesConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    order_I: int = Field(default=4, ge=0, le=8)  # noqa: N815
    epsilon_offset: float = Field(default=1e-4, gt=0, lt=1e-1)
    symmetric_offset: bool = False
    working_dps: int | None = Field(default=None, ge=20, description="mpmath digits; 30 + 10 N when None")
    max_terms: int = Field(default=2_000_000, ge=1)
    reliability_tol: float = Field(
        default=0.05, gt=0, description="Largest relative change the last series order may still make to a value"
    )


class EvaluationSettings(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    meijer: MellinBarnesConfig = MellinBarnesConfig()
    inversion: InvLaplaceConfig = InvLaplaceConfig()
    series: SeriesConfig = SeriesConfig()
    aser_nodes: int = Field(default=64, ge=16, description="Gauss-Legendre nodes for the exact error rate")

    @model_validator(mode="after")
    def _check_inversion(self) -> "EvaluationSettings":
        if self.inversion.method != "dehoog":
            msg = "MGF inversion needs abscissae in Re s > 0; use method='dehoog'"
            raise ValueError(msg)
        return self
