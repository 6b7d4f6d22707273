import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Self

from mpmath import mpf
from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt, field_validator, model_validator
from scipy import special

from lib.nakagami import NakagamiParams

TColumn = tuple[NakagamiParams, ...]


class SumProductModel(BaseModel):
    """H = sum over n of prod over l of X_{l,n}, all amplitudes independent.

    Stored column-wise: `columns[n][l]`. Every column has the same depth L and is kept sorted by m.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    columns: tuple[TColumn, ...]

    @field_validator("columns")
    @classmethod
    def _sort_columns(cls, columns: tuple[TColumn, ...]) -> tuple[TColumn, ...]:
        if not columns or not columns[0]:
            msg = "a sum-product model needs at least one non-empty column"
            raise ValueError(msg)
        depth = len(columns[0])
        if any(len(column) != depth for column in columns):
            msg = "every column must hold the same number of factors"
            raise ValueError(msg)
        return tuple(tuple(sorted(column, key=lambda p: p.m)) for column in columns)

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[NakagamiParams]]) -> Self:
        """Build from an L x N grid indexed `grid[l][n]`."""
        return cls(columns=tuple(zip(*grid, strict=True)))

    @classmethod
    def iid(cls, column: Sequence[NakagamiParams], count: int) -> Self:
        return cls(columns=(tuple(column),) * count)

    @property
    def depth(self) -> int:
        """L, the number of factors per product."""
        return len(self.columns[0])

    @property
    def width(self) -> int:
        """N, the number of products summed."""
        return len(self.columns)


class DoubleIidModel(BaseModel):
    """N i.i.d. double-Nakagami products, normalised so that m1 <= m2."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    m1: PositiveFloat
    m2: PositiveFloat
    omega1: PositiveFloat
    omega2: PositiveFloat
    elements: PositiveInt

    @model_validator(mode="before")
    @classmethod
    def _order_shapes(cls, data: Any) -> Any:
        if isinstance(data, dict) and {"m1", "m2"} <= data.keys() and data["m1"] > data["m2"]:
            data = dict(data)
            data["m1"], data["m2"] = data["m2"], data["m1"]
            data["omega1"], data["omega2"] = data.get("omega2"), data.get("omega1")
        return data

    @property
    def nu(self) -> float:
        return self.m1 - self.m2

    @property
    def b(self) -> float:
        return math.sqrt(self.omega1 * self.omega2)

    @property
    def convergence_abscissa(self) -> float:
        """The H-domain MGF series converges for s beyond this value."""
        return 2 * self.b

    def branch(self) -> TColumn:
        return (NakagamiParams(m=self.m1, omega=self.omega1), NakagamiParams(m=self.m2, omega=self.omega2))

    def to_sum_product(self) -> SumProductModel:
        return SumProductModel.iid(self.branch(), self.elements)


@dataclass(frozen=True, slots=True)
class SeriesTerm:
    """One term of the multinomial series: multiplicity * coefficient * weight(exponent)."""

    composition: tuple[int, ...]
    inner: tuple[int, ...]
    multiplicity: int
    coefficient: mpf
    exponent: mpf


@dataclass(frozen=True, slots=True)
class AsymptoticForm:
    """Leading behaviour of H near zero: density ~ gain h^(2 exponent - 1) / Gamma(2 exponent).

    Equivalently M_H(s) ~ gain s^(-2 exponent) as s grows; `exponent` is the diversity order of rho H^2.
    """

    log_gain: float
    exponent: float

    @property
    def gain(self) -> float:
        return math.exp(self.log_gain)

    def combine(self, other: "AsymptoticForm") -> "AsymptoticForm":
        """Form of the sum of two independent variables."""
        return AsymptoticForm(self.log_gain + other.log_gain, self.exponent + other.exponent)

    def _log_half_gamma_domain(self) -> float:
        t = self.exponent
        return self.log_gain - math.log(2) - (special.gammaln(2 * t) - special.gammaln(t))

    def mgf(self, s: float) -> float:
        return math.exp(self.log_gain - 2 * self.exponent * math.log(s))

    def pdf(self, h: float) -> float:
        t = self.exponent
        if h == 0:
            return 0.0 if t > 0.5 else (self.gain if t == 0.5 else math.inf)  # noqa: PLR2004
        return math.exp(self.log_gain + (2 * t - 1) * math.log(h) - special.gammaln(2 * t))

    def cdf(self, h: float) -> float:
        t = self.exponent
        return 0.0 if h == 0 else math.exp(self.log_gain + 2 * t * math.log(h) - special.gammaln(2 * t + 1))

    def snr_mgf(self, s: float, rho: float) -> float:
        return math.exp(self._log_half_gamma_domain() - self.exponent * math.log(rho * s))

    def snr_pdf(self, x: float, rho: float) -> float:
        t = self.exponent
        return math.exp(
            self.log_gain - math.log(2 * rho) + (t - 1) * math.log(x / rho) - special.gammaln(2 * t)
        )

    def outage(self, gamma_th: float, rho: float) -> float:
        t = self.exponent
        if gamma_th == 0:
            return 0.0
        return math.exp(self._log_half_gamma_domain() + t * math.log(gamma_th / rho) - special.gammaln(t + 1))

    def aser(self, alpha: float, g: float, rho: float) -> float:
        t = self.exponent
        log_value = (
            self.log_gain
            + special.gammaln(t + 0.5)
            - special.gammaln(t + 1)
            - (special.gammaln(2 * t) - special.gammaln(t))
            - t * math.log(rho * g)
        )
        return alpha / (4 * math.sqrt(math.pi)) * math.exp(log_value)
