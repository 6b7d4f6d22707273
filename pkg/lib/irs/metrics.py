"""Outage probability, average symbol error rate and SNR statistics for IRS links.

The received SNR is gamma = rho H^2. Three evaluation routes are offered:

* exact_series: the multinomial series with a closed-form weight per exponent, i.i.d. cascaded links only.
* exact_numeric: inversion of the exact Meijer-G MGF of H (direct link allowed).
* upper: the leading high-SNR term, which bounds the MGF from above.
"""

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import replace
from functools import partial

import numpy as np
from mpmath import mp, mpf
from numpy.typing import NDArray
from scipy import integrate

from lib.configs import EvaluationSettings
from lib.errors import MethodUnavailableError
from lib.sumprod import (
    AsymptoticForm,
    DoubleIidModel,
    asymptotic_form_columns,
    cdf_from_mgf,
    pdf_from_mgf,
    product_mgf,
)
from lib.sumprod.series import SeriesEvaluation, TWeight, clamp_density, clamp_probability, series_evaluate

from .model import IrsModel, MetricMethod, ModulationSpec

logger = logging.getLogger(__name__)

# e^(-u^2/2) is below 1e-21 past this point
_GAUSSIAN_CUTOFF = 10.0

TRealFunction = Callable[[float], float]


def _settings(settings: EvaluationSettings | None) -> EvaluationSettings:
    return settings or EvaluationSettings()


def _check_rho(rho: float) -> None:
    if not rho > 0:
        msg = f"average SNR must be positive, got {rho:g}"
        raise ValueError(msg)


def series_model(model: IrsModel) -> DoubleIidModel:
    if model.has_direct:
        msg = "the closed-form series covers the cascaded links only; use exact_numeric with a direct link"
        raise MethodUnavailableError(msg)
    return model.double_iid()


def upper_form(model: IrsModel) -> AsymptoticForm:
    return asymptotic_form_columns(model.columns())


def channel_mgf(model: IrsModel, settings: EvaluationSettings | None = None) -> Callable[[complex], complex]:
    """Exact MGF of the composite amplitude, direct link included when present."""
    meijer = _settings(settings).meijer
    columns = model.columns()
    return lambda s: product_mgf(columns, s, meijer)


def channel_cdf(model: IrsModel, h: Sequence[float], settings: EvaluationSettings | None = None) -> NDArray:
    settings = _settings(settings)
    return cdf_from_mgf(channel_mgf(model, settings), h, settings.inversion)


def _legendre(count: int, upper: float) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    nodes, weights = np.polynomial.legendre.leggauss(count)
    return upper * (nodes + 1) / 2, upper * weights / 2


def expected_q(cdf: Callable[[NDArray], NDArray], scale: float, alpha: float, nodes: int) -> float:
    """alpha * E[Q(scale * H)] written as alpha / sqrt(2 pi) * int F_H(u / scale) exp(-u^2 / 2) du."""
    u, w = _legendre(nodes, _GAUSSIAN_CUTOFF)
    values = cdf(u / scale)
    return float(alpha / math.sqrt(2 * math.pi) * np.dot(w, values * np.exp(-(u**2) / 2)))


def _mp_half_pochhammer(t: mpf) -> mpf:
    return 2 * mp.rf(t, t)


def _snr_mgf_weight(scaled_s: float) -> TWeight:
    return lambda t: mp.power(scaled_s, -t) / _mp_half_pochhammer(t)


def _snr_pdf_weight(x: float, rho: float) -> TWeight:
    return lambda t: mp.power(x / rho, t - 1) * mp.rgamma(2 * t) / (2 * rho)


def _outage_weight(ratio: float) -> TWeight:
    return lambda t: mp.power(ratio, t) / (_mp_half_pochhammer(t) * mp.gamma(t + 1))


def _aser_weight(scaled_rho: float) -> TWeight:
    return lambda t: mp.rf(t + 1, -0.5) / mp.rf(t, t) * mp.power(scaled_rho, -t)


# -- exact_series with its truncation diagnostic; arguments are strictly positive -----------------


def snr_mgf_series(
    model: IrsModel, s: float, rho: float, settings: EvaluationSettings | None = None
) -> SeriesEvaluation:
    where = f"s={s:g}, rho={rho:g}"
    return series_evaluate(series_model(model), _settings(settings).series, _snr_mgf_weight(rho * s), where)


def snr_pdf_series(
    model: IrsModel, x: float, rho: float, settings: EvaluationSettings | None = None
) -> SeriesEvaluation:
    where = f"x={x:g}, rho={rho:g}"
    evaluation = series_evaluate(series_model(model), _settings(settings).series, _snr_pdf_weight(x, rho), where)
    return clamp_density(evaluation, where)


def outage_series(
    model: IrsModel, gamma_th: float, rho: float, settings: EvaluationSettings | None = None
) -> SeriesEvaluation:
    where = f"gamma_th={gamma_th:g}, rho={rho:g}"
    weight = _outage_weight(gamma_th / rho)
    return clamp_probability(series_evaluate(series_model(model), _settings(settings).series, weight, where), where)


def aser_series(
    model: IrsModel, modulation: ModulationSpec, rho: float, settings: EvaluationSettings | None = None
) -> SeriesEvaluation:
    where = f"rho={rho:g}"
    weight = _aser_weight(rho * modulation.g)
    evaluation = series_evaluate(series_model(model), _settings(settings).series, weight, where)
    factor = modulation.alpha / (4 * math.sqrt(math.pi))
    scaled = replace(evaluation, raw=evaluation.raw * factor, value=evaluation.value * factor)
    return clamp_probability(scaled, where, modulation.alpha / 2)


def _snr_mgf_numeric(model: IrsModel, rho: float, settings: EvaluationSettings, s: float) -> float:
    # E[exp(-a H^2)] = int 2 u exp(-u^2) F_H(u / sqrt a) du
    u, w = _legendre(settings.aser_nodes, _GAUSSIAN_CUTOFF / math.sqrt(2))
    values = channel_cdf(model, u / math.sqrt(rho * s), settings)
    return float(np.dot(w, 2 * u * np.exp(-(u**2)) * values))


def _snr_mgf_route(model: IrsModel, rho: float, method: MetricMethod, settings: EvaluationSettings) -> TRealFunction:
    match method:
        case MetricMethod.EXACT_SERIES:
            series_model(model)
            return lambda s: snr_mgf_series(model, s, rho, settings).value
        case MetricMethod.EXACT_NUMERIC:
            return partial(_snr_mgf_numeric, model, rho, settings)
        case MetricMethod.UPPER_BOUND:
            form = upper_form(model)
            return lambda s: form.snr_mgf(s, rho)
    msg = f"unknown method {method!r}"
    raise ValueError(msg)


# -- public metrics ------------------------------------------------------------------------------


def snr_mgf(
    model: IrsModel,
    rho: float,
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> TRealFunction:
    """Handle s -> E[exp(-s gamma)] for s >= 0 under one method; availability is checked up front."""
    _check_rho(rho)
    route = _snr_mgf_route(model, rho, method, _settings(settings))

    def mgf(s: float) -> float:
        if s < 0:
            msg = f"MGF argument must be non-negative, got {s:g}"
            raise ValueError(msg)
        return 1.0 if s == 0 else route(s)

    return mgf


def snr_pdf(
    model: IrsModel,
    x: float,
    rho: float,
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> float:
    """Density of gamma at x."""
    _check_rho(rho)
    if x <= 0:
        return 0.0
    settings = _settings(settings)
    match method:
        case MetricMethod.EXACT_SERIES:
            return snr_pdf_series(model, x, rho, settings).value
        case MetricMethod.EXACT_NUMERIC:
            h = math.sqrt(x / rho)
            density = pdf_from_mgf(channel_mgf(model, settings), [h], settings.inversion)[0]
            return float(density / (2 * math.sqrt(x * rho)))
        case MetricMethod.UPPER_BOUND:
            return upper_form(model).snr_pdf(x, rho)
    msg = f"unknown method {method!r}"
    raise ValueError(msg)


def snr_pdf_curve(
    model: IrsModel,
    xs: Sequence[float],
    rho: float,
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> NDArray[np.float64]:
    """snr_pdf over a grid; exact_numeric shares a single batched inversion."""
    _check_rho(rho)
    settings = _settings(settings)
    if method is not MetricMethod.EXACT_NUMERIC:
        return np.array([snr_pdf(model, x, rho, method, settings) for x in xs], dtype=float)
    x = np.asarray(xs, dtype=float)
    out = np.zeros(x.shape)
    positive = x > 0
    density = pdf_from_mgf(channel_mgf(model, settings), np.sqrt(x[positive] / rho), settings.inversion)
    out[positive] = density / (2 * np.sqrt(x[positive] * rho))
    return out


def outage_curve(
    model: IrsModel,
    gamma_th: float,
    rhos: Sequence[float],
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> NDArray[np.float64]:
    """P(gamma <= gamma_th) over a grid of average SNRs."""
    for rho in rhos:
        _check_rho(rho)
    if gamma_th < 0:
        msg = f"threshold must be non-negative, got {gamma_th:g}"
        raise ValueError(msg)
    rho_values = np.asarray(rhos, dtype=float)
    if gamma_th == 0:
        return np.zeros(rho_values.shape)
    settings = _settings(settings)
    match method:
        case MetricMethod.EXACT_SERIES:
            return np.array([outage_series(model, gamma_th, rho, settings).value for rho in rho_values])
        case MetricMethod.EXACT_NUMERIC:
            return channel_cdf(model, np.sqrt(gamma_th / rho_values), settings)
        case MetricMethod.UPPER_BOUND:
            form = upper_form(model)
            return np.array([form.outage(gamma_th, rho) for rho in rho_values])
    msg = f"unknown method {method!r}"
    raise ValueError(msg)


def outage_probability(
    model: IrsModel,
    gamma_th: float,
    rho: float,
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> float:
    return float(outage_curve(model, gamma_th, [rho], method, settings)[0])


def aser(
    model: IrsModel,
    modulation: ModulationSpec,
    rho: float,
    method: MetricMethod,
    settings: EvaluationSettings | None = None,
) -> float:
    """Average of alpha * Q(sqrt(2 g gamma)) over the fading."""
    _check_rho(rho)
    settings = _settings(settings)
    match method:
        case MetricMethod.EXACT_SERIES:
            return aser_series(model, modulation, rho, settings).value
        case MetricMethod.EXACT_NUMERIC:
            return expected_q(
                lambda h: channel_cdf(model, h, settings),
                math.sqrt(2 * modulation.g * rho),
                modulation.alpha,
                settings.aser_nodes,
            )
        case MetricMethod.UPPER_BOUND:
            return upper_form(model).aser(modulation.alpha, modulation.g, rho)
    msg = f"unknown method {method!r}"
    raise ValueError(msg)


def aser_from_mgf(snr_mgf_fn: TRealFunction, modulation: ModulationSpec) -> float:
    """alpha / pi * int_0^{pi/2} M_gamma(g / sin^2 phi) dphi for any SNR MGF."""
    value, _ = integrate.quad(lambda phi: snr_mgf_fn(modulation.g / math.sin(phi) ** 2), 0, math.pi / 2, limit=200)
    return modulation.alpha / math.pi * value
