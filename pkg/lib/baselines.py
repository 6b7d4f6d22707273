"""Moment-matched approximations of the composite amplitude H.

Both laws match the exact mean and variance of H. The normal one follows the central limit theorem and
is truncated to H >= 0; the gamma one is supported on H >= 0 by construction.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import stats

from lib import nakagami
from lib.errors import DegenerateFitError
from lib.irs import IrsModel, ModulationSpec, expected_q
from lib.sumprod import SumProductModel, TColumn

logger = logging.getLogger(__name__)

_ASER_NODES = 64


class BaselineKind(StrEnum):
    CLT = "clt"
    GAMMA = "gamma"


class Metric(StrEnum):
    OP = "op"
    ASER = "aser"
    PDF = "pdf"


@dataclass(frozen=True, slots=True)
class BaselineApprox:
    kind: BaselineKind
    mean: float
    variance: float

    @property
    def distribution(self) -> stats.rv_continuous:
        sigma = math.sqrt(self.variance)
        if self.kind is BaselineKind.CLT:
            return stats.truncnorm(-self.mean / sigma, np.inf, loc=self.mean, scale=sigma)
        shape = self.mean**2 / self.variance
        return stats.gamma(shape, scale=self.variance / self.mean)

    def cdf(self, h: ArrayLike) -> NDArray[np.float64]:
        return self.distribution.cdf(h)

    def pdf(self, h: ArrayLike) -> NDArray[np.float64]:
        return self.distribution.pdf(h)


def _columns(model: SumProductModel | IrsModel) -> Sequence[TColumn]:
    return model.columns() if isinstance(model, IrsModel) else model.columns


def moments(model: SumProductModel | IrsModel) -> tuple[float, float]:
    """Exact mean and variance of H."""
    mean = 0.0
    variance = 0.0
    for column in _columns(model):
        first = math.prod(nakagami.moment(p, 1) for p in column)
        second = math.prod(p.mean_power for p in column)
        mean += first
        variance += second - first**2
    return mean, variance


def _fit(model: SumProductModel | IrsModel, kind: BaselineKind) -> BaselineApprox:
    mean, variance = moments(model)
    if not variance > 0 or not mean > 0:
        raise DegenerateFitError(f"cannot fit a {kind} law to mean={mean:g}, variance={variance:g}")
    logger.debug(f"Fitted {kind} baseline: mean={mean:.6g}, variance={variance:.6g}")
    return BaselineApprox(kind, mean, variance)


def fit_clt(model: SumProductModel | IrsModel) -> BaselineApprox:
    return _fit(model, BaselineKind.CLT)


def fit_gamma(model: SumProductModel | IrsModel) -> BaselineApprox:
    return _fit(model, BaselineKind.GAMMA)


def clt_error_floor(approx: BaselineApprox) -> float:
    """Probability mass the untruncated normal law puts on negative amplitudes."""
    return float(stats.norm.cdf(-approx.mean / math.sqrt(approx.variance)))


def baseline_metric(
    approx: BaselineApprox,
    metric: Metric,
    rho: float,
    *,
    gamma_th: float | None = None,
    modulation: ModulationSpec | None = None,
    x: float | None = None,
) -> float:
    """Evaluate OP (needs gamma_th), ASER (needs modulation) or the SNR density (needs x) under the fitted law."""
    if not rho > 0:
        msg = f"average SNR must be positive, got {rho:g}"
        raise ValueError(msg)
    match metric:
        case Metric.OP:
            if gamma_th is None:
                msg = "outage needs gamma_th"
                raise ValueError(msg)
            return float(approx.cdf(math.sqrt(gamma_th / rho)))
        case Metric.ASER:
            if modulation is None:
                msg = "error rate needs a modulation"
                raise ValueError(msg)
            return expected_q(approx.cdf, math.sqrt(2 * modulation.g * rho), modulation.alpha, _ASER_NODES)
        case Metric.PDF:
            if x is None or x <= 0:
                return 0.0
            return float(approx.pdf(math.sqrt(x / rho)) / (2 * math.sqrt(x * rho)))
    msg = f"unknown metric {metric!r}"
    raise ValueError(msg)
