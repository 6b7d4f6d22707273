import logging
import math
from collections import Counter
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special

from lib.configs import EvaluationSettings, InvLaplaceConfig, MellinBarnesConfig
from lib.specfun import bessel_k, inverse_laplace_batch, meijer_g_2L_L2

from .model import SumProductModel, TColumn

logger = logging.getLogger(__name__)

TMgf = Callable[[complex], complex]


def _is_real(s: complex) -> bool:
    return isinstance(s, (int, float, np.floating, np.integer))


def branch_mgf_exact(column: TColumn, s: complex, cfg: MellinBarnesConfig | None = None) -> complex | float:
    """MGF of one product of independent Nakagami amplitudes."""
    if s == 0:
        return 1.0
    shapes = [p.m for p in column]
    omega = math.prod(p.omega for p in column)
    kernel = meijer_g_2L_L2([1 - m for m in shapes], s * s / (4 * omega), cfg)
    value = kernel * math.exp(-0.5 * math.log(math.pi) - float(np.sum(special.gammaln(shapes))))
    return value.real if _is_real(s) else value


def product_mgf(columns: Sequence[TColumn], s: complex, cfg: MellinBarnesConfig | None = None) -> complex | float:
    """MGF of a sum of independent products; identical columns are evaluated once."""
    value: complex | float = 1.0
    for column, count in Counter(columns).items():
        value *= branch_mgf_exact(column, s, cfg) ** count
    return value


def mgf_exact(model: SumProductModel, s: complex, cfg: MellinBarnesConfig | None = None) -> complex | float:
    return product_mgf(model.columns, s, cfg)


def pdf_from_mgf(mgf: TMgf, points: ArrayLike, cfg: InvLaplaceConfig) -> NDArray[np.float64]:
    hs = np.atleast_1d(np.asarray(points, dtype=float))
    out = np.zeros(hs.shape)
    positive = hs > 0
    if positive.any():
        out[positive] = np.maximum(inverse_laplace_batch(mgf, hs[positive], cfg), 0.0)
    return out


def cdf_from_mgf(mgf: TMgf, points: ArrayLike, cfg: InvLaplaceConfig) -> NDArray[np.float64]:
    hs = np.atleast_1d(np.asarray(points, dtype=float))
    out = np.zeros(hs.shape)
    positive = hs > 0
    if positive.any():
        values = inverse_laplace_batch(lambda s: mgf(s) / s, hs[positive], cfg)
        out[positive] = np.clip(values, 0.0, 1.0)
    return out


def _scalar_or_array(values: NDArray[np.float64], points: ArrayLike) -> NDArray[np.float64] | float:
    return float(values[0]) if np.ndim(points) == 0 else values


def pdf_numeric(
    model: SumProductModel,
    h: ArrayLike,
    settings: EvaluationSettings | None = None,
) -> NDArray[np.float64] | float:
    """Density of H by inverting the exact MGF; zero for h <= 0."""
    settings = settings or EvaluationSettings()
    values = pdf_from_mgf(lambda s: mgf_exact(model, s, settings.meijer), h, settings.inversion)
    return _scalar_or_array(values, h)


def cdf_numeric(
    model: SumProductModel,
    h: ArrayLike,
    settings: EvaluationSettings | None = None,
) -> NDArray[np.float64] | float:
    settings = settings or EvaluationSettings()
    values = cdf_from_mgf(lambda s: mgf_exact(model, s, settings.meijer), h, settings.inversion)
    return _scalar_or_array(values, h)


def double_product_pdf_closed(m1: float, m2: float, omega1: float, omega2: float, x: float) -> float:
    """Density of X1 X2 for independent Nakagami amplitudes, through K_{m1-m2}."""
    if x <= 0:
        return 0.0
    b = math.sqrt(omega1 * omega2)
    log_front = (
        math.log(4)
        + (m1 + m2 - 1) * math.log(x)
        + (m1 + m2) * math.log(b)
        - special.gammaln(m1)
        - special.gammaln(m2)
    )
    return math.exp(log_front) * bessel_k(m1 - m2, 2 * b * x)
