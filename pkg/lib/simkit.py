"""Monte-Carlo reference estimates.

Every (point, chunk) pair owns an independent substream derived from the master seed, so results do
not depend on how chunks are scheduled.
"""

import logging
import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from lib.configs import McConfig
from lib.irs import IrsModel, ModulationSpec
from lib.specfun import gaussian_q
from lib.sumprod import SumProductModel, sample_columns

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class McEstimate:
    estimate: float
    std_error: float
    trials: int


@dataclass(frozen=True, slots=True)
class Histogram:
    edges: NDArray[np.float64]
    counts: NDArray[np.int64]
    density: NDArray[np.float64]
    errors: NDArray[np.float64]
    trials: int
    outside: int = 0

    @property
    def mass(self) -> float:
        return float(np.sum(self.density * np.diff(self.edges)))

    @property
    def centers(self) -> NDArray[np.float64]:
        return (self.edges[:-1] + self.edges[1:]) / 2

    def at(self, x: float) -> tuple[float, float]:
        """Density and its error in the bin holding x; zero outside the range."""
        index = int(np.searchsorted(self.edges, x, side="right")) - 1
        if not 0 <= index < self.density.size:
            return 0.0, 0.0
        return float(self.density[index]), float(self.errors[index])


def substream(cfg: McConfig, point_index: int, chunk: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(cfg.master_seed, spawn_key=(point_index, chunk)))


def _chunk_sizes(cfg: McConfig) -> Iterator[tuple[int, int]]:
    remaining = cfg.trials
    chunk = 0
    while remaining > 0:
        size = min(cfg.chunk_size, remaining)
        yield chunk, size
        remaining -= size
        chunk += 1


def sample_amplitude(model: IrsModel | SumProductModel, rng: np.random.Generator, size: int) -> NDArray[np.float64]:
    columns = model.columns() if isinstance(model, IrsModel) else model.columns
    return sample_columns(columns, rng, size)


def _mean_estimate(
    model: IrsModel | SumProductModel,
    cfg: McConfig,
    point_index: int,
    statistic: Callable[[NDArray[np.float64], np.random.Generator], NDArray[np.float64]],
) -> McEstimate:
    total = 0.0
    total_sq = 0.0
    for chunk, size in _chunk_sizes(cfg):
        rng = substream(cfg, point_index, chunk)
        values = statistic(sample_amplitude(model, rng, size), rng)
        total += float(values.sum())
        total_sq += float(np.square(values).sum())
    mean = total / cfg.trials
    variance = max(total_sq / cfg.trials - mean**2, 0.0)
    return McEstimate(mean, math.sqrt(variance / cfg.trials), cfg.trials)


def mc_outage(
    model: IrsModel,
    gamma_th: float,
    rho: float,
    cfg: McConfig | None = None,
    point_index: int = 0,
) -> McEstimate:
    cfg = cfg or McConfig()
    estimate = _mean_estimate(model, cfg, point_index, lambda h, _: (rho * h**2 <= gamma_th).astype(float))
    logger.debug(f"MC outage at rho={rho:g}: {estimate.estimate:.4e} +- {estimate.std_error:.1e}")
    return estimate


def mc_aser(
    model: IrsModel,
    modulation: ModulationSpec,
    rho: float,
    cfg: McConfig | None = None,
    point_index: int = 0,
) -> McEstimate:
    """Semi-analytic estimate: the conditional error alpha Q(sqrt(2 g gamma)) averaged over channel draws."""
    cfg = cfg or McConfig()
    scale = math.sqrt(2 * modulation.g * rho)
    return _mean_estimate(
        model, cfg, point_index, lambda h, _: np.clip(modulation.alpha * gaussian_q(scale * h), 0.0, 1.0)
    )


def mc_symbol_error_bpsk(
    model: IrsModel,
    rho: float,
    cfg: McConfig | None = None,
    point_index: int = 0,
) -> McEstimate:
    """Count BPSK decision errors over noisy symbols; the conditional error is Q(sqrt(2 gamma))."""
    cfg = cfg or McConfig()

    def errors(h: NDArray[np.float64], rng: np.random.Generator) -> NDArray[np.float64]:
        symbols = 2.0 * rng.integers(0, 2, h.size) - 1.0
        received = math.sqrt(rho) * h * symbols + rng.normal(0.0, math.sqrt(0.5), h.size)
        return (np.sign(received) != symbols).astype(float)

    return _mean_estimate(model, cfg, point_index, errors)


def mc_mgf(
    model: IrsModel | SumProductModel,
    s: float,
    cfg: McConfig | None = None,
    point_index: int = 0,
) -> McEstimate:
    """E[exp(-s H)]."""
    cfg = cfg or McConfig()
    return _mean_estimate(model, cfg, point_index, lambda h, _: np.exp(-s * h))


def mc_histogram(
    model: IrsModel | SumProductModel,
    cfg: McConfig | None = None,
    *,
    rho: float | None = None,
    bins: int | None = None,
    value_range: tuple[float, float] | None = None,
    point_index: int = 0,
) -> Histogram:
    """Normalised histogram of H, or of gamma = rho H^2 when rho is given.

    Without value_range the bins start at 0 and the last one stretches to the largest draw, so the
    histogram holds every sample. With value_range, draws outside it are only counted in `outside`.
    """
    cfg = cfg or McConfig()
    bins = bins or cfg.histogram_bins
    counts = np.zeros(bins, dtype=np.int64)
    edges: NDArray[np.float64] | None = None
    largest = 0.0
    for chunk, size in _chunk_sizes(cfg):
        values = sample_amplitude(model, substream(cfg, point_index, chunk), size)
        if rho is not None:
            values = rho * values**2
        if edges is None:
            low, high = value_range or (0.0, float(np.quantile(values, 0.9999)))
            edges = np.linspace(low, high, bins + 1)
        if value_range is None:
            largest = max(largest, float(values.max()))
            values = np.minimum(values, edges[-1])
        counts += np.histogram(values, bins=edges)[0]
    if value_range is None:
        edges[-1] = max(edges[-1], largest)
    outside = cfg.trials - int(counts.sum())
    if outside:
        logger.debug(f"{outside} of {cfg.trials} draws fell outside the histogram range {value_range}")
    widths = np.diff(edges)
    density = counts / (cfg.trials * widths)
    errors = np.sqrt(counts) / (cfg.trials * widths)
    return Histogram(edges, counts, density, errors, cfg.trials, outside)
