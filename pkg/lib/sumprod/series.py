"""Closed-form series for N i.i.d. double-Nakagami products.

Each branch MGF is a two-family power series in s^-2 (from the small-argument expansion of K_nu):

    M(s) = c * sum_i [ A_i s^(-2(i + m2)) - B_i s^(-2(i + m1)) ],   c = 2 pi csc(nu pi) / (Gamma(m1) Gamma(m2))

with A_i = h(i + m2), B_i = h(i + m1) and h(x) = (Omega1 Omega2)^x Gamma(2x) / (Gamma(1 + x - m1) Gamma(1 + x - m2)).
Raising it to the N-th power by the multinomial theorem gives terms K * s^(-2 t); any transform that maps
s^(-2 t) to a closed form (density, CDF, SNR-domain metrics) becomes a weight applied term by term.

The two families nearly cancel, so everything is accumulated in mpmath. For integer nu the csc pole is
removed by offsetting m1, and A_i is kept only while its partner B_{i+d} survives truncation.
"""

import itertools
import logging
import math
import threading
from collections.abc import Callable, Iterator
from dataclasses import dataclass, replace
from functools import lru_cache

from mpmath import mp, mpf

from lib.configs import SeriesConfig
from lib.errors import TermCountError

from .model import DoubleIidModel, SeriesTerm

logger = logging.getLogger(__name__)

TWeight = Callable[[mpf], mpf]

# mpmath precision is process-global
MP_LOCK = threading.RLock()

_PAIRING_WINDOW = 1e-3
_INTEGER_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class SeriesEvaluation:
    """A series value with its truncation diagnostic.

    `last_order_change` is |S_I - S_(I-1)| / |S_I|; None when I = 0. `reliable` is False once that
    change exceeds `SeriesConfig.reliability_tol`.
    """

    value: float
    raw: float
    clamped: bool
    epsilon: float | None
    last_order_change: float | None = None
    reliable: bool = True

    @property
    def flags(self) -> tuple[str, ...]:
        flags = [] if self.epsilon is None else [f"eps={self.epsilon:.0e}"]
        if self.clamped:
            flags.append("clamped")
        if not self.reliable:
            flags.append("unreliable")
        return tuple(flags)

    def bounded(self, lower: float, upper: float = math.inf) -> "SeriesEvaluation":
        value = min(max(self.raw, lower), upper)
        return replace(self, value=value, clamped=value != self.raw)


@dataclass(frozen=True, slots=True)
class _Variant:
    """One concrete shape pair the series is built for."""

    m1: float
    pair_gap: int | None
    epsilon: float | None


@dataclass(frozen=True, slots=True)
class _Families:
    scale: mpf
    a_family: tuple[mpf | None, ...]
    b_family: tuple[mpf, ...]
    m1: mpf
    m2: mpf


def term_count(width: int, order: int) -> int:
    """Number of (composition, inner index) pairs for N = width and I = order."""
    return math.comb(width + 2 * order + 1, width)


def working_dps(model: DoubleIidModel, cfg: SeriesConfig) -> int:
    return cfg.working_dps or 30 + 10 * model.elements


@lru_cache(maxsize=128)
def _variants(model: DoubleIidModel, cfg: SeriesConfig) -> tuple[_Variant, ...]:
    spread = model.m2 - model.m1
    gap = round(spread)
    distance = abs(spread - gap)
    if distance >= _PAIRING_WINDOW:
        return (_Variant(model.m1, None, None),)
    if distance > _INTEGER_TOL:
        return (_Variant(model.m1, gap, None),)

    offsets = [cfg.epsilon_offset]
    if cfg.symmetric_offset and model.m1 > cfg.epsilon_offset:
        offsets.append(-cfg.epsilon_offset)
    logger.warning(f"Integer m2 - m1 = {gap}: offsetting m1 by {offsets} to avoid the csc pole")
    return tuple(_Variant(model.m1 + offset, gap, offset) for offset in offsets)


def _families(model: DoubleIidModel, variant: _Variant, order: int) -> _Families:
    m1, m2 = mp.mpf(variant.m1), mp.mpf(model.m2)
    omega = mp.mpf(model.omega1) * mp.mpf(model.omega2)
    nu = m1 - m2
    scale = 2 * mp.pi * mp.csc(nu * mp.pi) / (mp.gamma(m1) * mp.gamma(m2))

    def h(shape: mpf) -> mpf:
        return mp.power(omega, shape) * mp.gamma(2 * shape) * mp.rgamma(1 + shape - m1) * mp.rgamma(1 + shape - m2)

    a_limit = order if variant.pair_gap is None else order - variant.pair_gap
    a_family = tuple(h(i + m2) if i <= a_limit else None for i in range(order + 1))
    b_family = tuple(h(i + m1) for i in range(order + 1))
    return _Families(scale, a_family, b_family, m1, m2)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _terms(model: DoubleIidModel, families: _Families, order: int) -> Iterator[SeriesTerm]:
    width = model.elements
    for composition in _compositions(width, order + 1):
        multiplicity = math.factorial(width)
        for k in composition:
            multiplicity //= math.factorial(k)
        for inner in itertools.product(*(range(k + 1) for k in composition)):
            coefficient = mp.mpf(1)
            exponent = mp.mpf(0)
            for i, (k, n) in enumerate(zip(composition, inner, strict=True)):
                a_value = families.a_family[i]
                if k == 0:
                    continue
                if a_value is None:
                    if n < k:
                        break
                    a_value = mp.mpf(0)
                coefficient *= math.comb(k, n) * (-families.b_family[i]) ** n * a_value ** (k - n)
                exponent += n * (families.m1 - families.m2) + k * (i + families.m2)
            else:
                yield SeriesTerm(composition, inner, multiplicity, coefficient, exponent)


def iter_terms(model: DoubleIidModel, cfg: SeriesConfig | None = None) -> Iterator[SeriesTerm]:
    """Yield every surviving term of the multinomial expansion (first offset variant only).

    The series prefactor c^N is not part of the terms.
    """
    cfg = cfg or SeriesConfig()
    _check_size(model, cfg)
    variant = _variants(model, cfg)[0]
    with MP_LOCK, mp.workdps(working_dps(model, cfg)):
        terms = list(_terms(model, _families(model, variant, cfg.order_I), cfg.order_I))
    yield from terms


def _check_size(model: DoubleIidModel, cfg: SeriesConfig) -> None:
    count = term_count(model.elements, cfg.order_I)
    if count > cfg.max_terms:
        raise TermCountError(count, cfg.max_terms)


@lru_cache(maxsize=128)
def _collapsed(
    model: DoubleIidModel,
    variant: _Variant,
    order: int,
    dps: int,
) -> tuple[mpf, tuple[tuple[mpf, mpf], ...]]:
    """Prefactor c^N and the terms summed per distinct exponent."""
    with MP_LOCK, mp.workdps(dps):
        families = _families(model, variant, order)
        grouped: dict[tuple[int, int], list] = {}
        for term in _terms(model, families, order):
            key = (sum(term.inner), sum(i * k for i, k in enumerate(term.composition)))
            entry = grouped.setdefault(key, [term.exponent, mp.mpf(0)])
            entry[1] += term.multiplicity * term.coefficient
        logger.debug(f"Collapsed series for N={model.elements}, I={order} into {len(grouped)} exponents")
        return families.scale**model.elements, tuple((e, c) for e, c in grouped.values())


def series_accumulate(model: DoubleIidModel, cfg: SeriesConfig | None, weight: TWeight) -> float:
    """c^N * sum of multiplicity * coefficient * weight(exponent), averaged over offset variants."""
    cfg = cfg or SeriesConfig()
    _check_size(model, cfg)
    dps = working_dps(model, cfg)
    variants = _variants(model, cfg)
    with MP_LOCK, mp.workdps(dps):
        total = mp.mpf(0)
        for variant in variants:
            prefactor, terms = _collapsed(model, variant, cfg.order_I, dps)
            total += prefactor * mp.fsum(coefficient * weight(exponent) for exponent, coefficient in terms)
        return float(total / len(variants))


def offset_in_use(model: DoubleIidModel, cfg: SeriesConfig) -> float | None:
    return _variants(model, cfg)[0].epsilon


def mgf_weight(s: float) -> TWeight:
    return lambda t: mp.power(s, -2 * t)


def pdf_weight(h: float) -> TWeight:
    return lambda t: mp.power(h, 2 * t - 1) * mp.rgamma(2 * t)


def cdf_weight(h: float) -> TWeight:
    return lambda t: mp.power(h, 2 * t) * mp.rgamma(2 * t + 1)


def series_evaluate(model: DoubleIidModel, cfg: SeriesConfig | None, weight: TWeight, where: str) -> SeriesEvaluation:
    """series_accumulate at order I, checked against order I - 1."""
    cfg = cfg or SeriesConfig()
    raw = series_accumulate(model, cfg, weight)
    change = None
    if cfg.order_I > 0:
        previous = series_accumulate(model, cfg.model_copy(update={"order_I": cfg.order_I - 1}), weight)
        change = abs(raw - previous) / abs(raw) if raw else math.inf
    reliable = change is None or change <= cfg.reliability_tol
    if not reliable:
        logger.warning(
            f"Series at {where} has not settled: order I={cfg.order_I} still moves it by {change:.1%}; "
            f"raise order_I or use exact_numeric"
        )
    return SeriesEvaluation(raw, raw, False, offset_in_use(model, cfg), change, reliable)


def _bounded(evaluation: SeriesEvaluation, where: str, lower: float, upper: float = math.inf) -> SeriesEvaluation:
    result = evaluation.bounded(lower, upper)
    if result.clamped:
        logger.warning(f"Series value {evaluation.raw:.3e} at {where} clamped to [{lower:g}, {upper:g}]")
    return result


def mgf_series_detailed(model: DoubleIidModel, cfg: SeriesConfig | None, s: float) -> SeriesEvaluation:
    if s <= model.convergence_abscissa:
        logger.warning(f"MGF series at s={s:g} is outside its convergence region s > {model.convergence_abscissa:g}")
    return series_evaluate(model, cfg, mgf_weight(s), f"s={s:g}")


def mgf_series(model: DoubleIidModel, cfg: SeriesConfig | None, s: float) -> float:
    return mgf_series_detailed(model, cfg, s).value


def clamp_density(evaluation: SeriesEvaluation, where: str) -> SeriesEvaluation:
    return _bounded(evaluation, where, 0.0)


def clamp_probability(evaluation: SeriesEvaluation, where: str, upper: float = 1.0) -> SeriesEvaluation:
    return _bounded(evaluation, where, 0.0, upper)


def pdf_series_detailed(model: DoubleIidModel, cfg: SeriesConfig | None, h: float) -> SeriesEvaluation:
    cfg = cfg or SeriesConfig()
    if h <= 0:
        return SeriesEvaluation(0.0, 0.0, False, offset_in_use(model, cfg))
    where = f"h={h:g}"
    return clamp_density(series_evaluate(model, cfg, pdf_weight(h), where), where)


def pdf_series(model: DoubleIidModel, cfg: SeriesConfig | None, h: float) -> float:
    return pdf_series_detailed(model, cfg, h).value


def cdf_series(model: DoubleIidModel, cfg: SeriesConfig | None, h: float) -> float:
    if h <= 0:
        return 0.0
    where = f"h={h:g}"
    return clamp_probability(series_evaluate(model, cfg, cdf_weight(h), where), where).value


def branch_series_mgf(model: DoubleIidModel, cfg: SeriesConfig | None, s: float) -> float:
    """Same truncation as the multinomial series, but summed per branch and raised to the N-th power."""
    cfg = cfg or SeriesConfig()
    dps = working_dps(model, cfg)
    variants = _variants(model, cfg)
    with MP_LOCK, mp.workdps(dps):
        total = mp.mpf(0)
        for variant in variants:
            families = _families(model, variant, cfg.order_I)
            branch = mp.mpf(0)
            for i, (a_value, b_value) in enumerate(zip(families.a_family, families.b_family, strict=True)):
                if a_value is not None:
                    branch += a_value * mp.power(s, -2 * (i + families.m2))
                branch -= b_value * mp.power(s, -2 * (i + families.m1))
            total += (families.scale * branch) ** model.elements
        return float(total / len(variants))
