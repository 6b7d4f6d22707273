import math
from enum import StrEnum
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator

from lib.nakagami import NakagamiParams
from lib.sumprod import DoubleIidModel, SumProductModel, TColumn

TModulationName = Literal["bfsk", "bpsk", "qpsk", "mpam", "mpsk", "rect_mqam", "mqam"]


class MetricMethod(StrEnum):
    EXACT_SERIES = "exact_series"
    EXACT_NUMERIC = "exact_numeric"
    UPPER_BOUND = "upper"


class ModulationSpec(BaseModel):
    """Symbol error probability alpha * Q(sqrt(2 g gamma)) for a given constellation."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    order: PositiveInt = 2
    alpha: PositiveFloat
    g: PositiveFloat

    @classmethod
    def from_name(cls, name: TModulationName, order: int = 2) -> Self:
        match name:
            case "bfsk":
                return cls(name=name, order=2, alpha=1.0, g=0.5)
            case "bpsk":
                return cls(name=name, order=2, alpha=1.0, g=1.0)
            case "qpsk":
                return cls(name=name, order=4, alpha=2.0, g=0.5)
            case "mpam":
                return cls(name=name, order=order, alpha=2 * (order - 1) / order, g=3 / (order**2 - 1))
            case "mpsk":
                return cls(name=name, order=order, alpha=2.0, g=math.sin(math.pi / order) ** 2)
            case "rect_mqam":
                root = math.sqrt(order)
                return cls(name=name, order=order, alpha=4 * (root - 1) / root, g=3 / (2 * (order - 1)))
            case "mqam":
                return cls(name=name, order=order, alpha=4.0, g=3 / (2 * (order - 1)))
        msg = f"unknown modulation {name!r}"
        raise ValueError(msg)


class IrsModel(BaseModel):
    """IRS link: N elements, M transmit antennas, optional direct source-destination path.

    The composite amplitude is H = sum over N*M of X_SI X_ID, plus X_SD when a direct link exists.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    elements: PositiveInt = Field(description="N, reflecting elements")
    antennas: PositiveInt = Field(default=1, description="M, transmit antennas")
    source_irs: NakagamiParams
    irs_destination: NakagamiParams
    direct: NakagamiParams | None = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "IrsModel":
        if self.source_irs.m < self.irs_destination.m:
            msg = f"m_SI={self.source_irs.m:g} must not be below m_ID={self.irs_destination.m:g}"
            raise ValueError(msg)
        return self

    @property
    def effective_elements(self) -> int:
        return self.elements * self.antennas

    @property
    def has_direct(self) -> bool:
        return self.direct is not None

    def branch(self) -> TColumn:
        return (self.irs_destination, self.source_irs)

    def channel_model(self) -> SumProductModel:
        """The cascaded part only, H_{2,NM}."""
        return SumProductModel.iid(self.branch(), self.effective_elements)

    def columns(self) -> tuple[TColumn, ...]:
        cascaded = (self.branch(),) * self.effective_elements
        return (*cascaded, (self.direct,)) if self.direct is not None else cascaded

    def double_iid(self) -> DoubleIidModel:
        return DoubleIidModel(
            m1=self.irs_destination.m,
            m2=self.source_irs.m,
            omega1=self.irs_destination.omega,
            omega2=self.source_irs.omega,
            elements=self.effective_elements,
        )
