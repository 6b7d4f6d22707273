"""Single Nakagami-m amplitude.

Omega is a rate: the density is 2 Omega^m / Gamma(m) x^(2m-1) exp(-Omega x^2), so E[X^2] = m / Omega.
"""

import math
from typing import Self

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, PositiveFloat
from scipy import special

from lib.configs import MellinBarnesConfig
from lib.specfun import log_pochhammer, meijer_g_2L_L2


class NakagamiParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    m: PositiveFloat
    omega: PositiveFloat

    @classmethod
    def unit_power(cls, m: float) -> Self:
        """Parameters with E[X^2] = 1."""
        return cls(m=m, omega=m)

    @classmethod
    def from_spread(cls, m: float, spread: float) -> Self:
        """Convert the textbook spread E[X^2] into the rate used here."""
        return cls(m=m, omega=m / spread)

    @property
    def mean_power(self) -> float:
        return self.m / self.omega


def pdf(params: NakagamiParams, x: ArrayLike) -> NDArray[np.float64] | float:
    xs = np.asarray(x, dtype=float)
    m, omega = params.m, params.omega
    with np.errstate(divide="ignore", invalid="ignore"):
        log_density = (
            math.log(2) + m * math.log(omega) - special.gammaln(m) + (2 * m - 1) * np.log(xs) - omega * xs**2
        )
        density = np.where(xs > 0, np.exp(log_density), 0.0)
    if m == 0.5:  # noqa: PLR2004
        density = np.where(xs == 0, 2 * math.sqrt(omega / math.pi), density)
    elif m < 0.5:  # noqa: PLR2004
        density = np.where(xs == 0, np.inf, density)
    return float(density) if density.ndim == 0 else density


def moment(params: NakagamiParams, k: float) -> float:
    """E[X^k] = (m)_{k/2} Omega^{-k/2}, finite for k > -2m."""
    if k <= -2 * params.m:
        msg = f"moment of order {k:g} diverges for m={params.m:g}"
        raise ValueError(msg)
    return math.exp(log_pochhammer(params.m, k / 2) - k / 2 * math.log(params.omega))


def sample(
    params: NakagamiParams,
    rng: np.random.Generator,
    size: int | tuple[int, ...] | None = None,
) -> NDArray[np.float64] | float:
    """Draw X = sqrt(G) with G ~ Gamma(shape m, scale 1/Omega)."""
    return np.sqrt(rng.gamma(params.m, 1 / params.omega, size))


def mgf_exact(params: NakagamiParams, s: complex, cfg: MellinBarnesConfig | None = None) -> complex | float:
    """E[exp(-s X)] through the single-shape Meijer G kernel.

    Real arguments give a float, complex arguments (Re s > 0) a complex.
    """
    if s == 0:
        return 1.0
    kernel = meijer_g_2L_L2([1 - params.m], s * s / (4 * params.omega), cfg)
    value = kernel / (math.sqrt(math.pi) * special.gamma(params.m))
    return value.real if isinstance(s, (int, float, np.floating, np.integer)) else value


def mgf_upper(params: NakagamiParams, s: float) -> float:
    """Upper bound 2 (m)_m Omega^m s^{-2m}, tight as s grows."""
    if s <= 0:
        msg = f"mgf_upper needs s > 0, got {s:g}"
        raise ValueError(msg)
    m = params.m
    return 2 * math.exp(log_pochhammer(m, m) + m * math.log(params.omega) - 2 * m * math.log(s))
