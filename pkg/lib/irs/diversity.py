import logging
from collections.abc import Sequence

import numpy as np

from lib.errors import AsymptoticRegimeError

from .metrics import upper_form
from .model import IrsModel

logger = logging.getLogger(__name__)


def diversity_order(model: IrsModel) -> float:
    """N M m_ID, plus m_SD with a direct link; requires m_SI > m_ID."""
    return upper_form(model).exponent


def empirical_diversity_slope(
    curve: Sequence[tuple[float, float]],
    regime_threshold: float = 1e-3,
    min_points: int = 3,
) -> float:
    """Negative log-log slope of (rho, metric) pairs, rho linear, restricted to metric < regime_threshold."""
    points = [(rho, value) for rho, value in curve if rho > 0 and 0 < value < regime_threshold]
    if len(points) < min_points:
        raise AsymptoticRegimeError(
            f"only {len(points)} points below {regime_threshold:g}; at least {min_points} are needed"
        )
    log_rho, log_value = np.log10(np.array(points)).T
    slope, _ = np.polyfit(log_rho, log_value, 1)
    logger.debug(f"Fitted diversity slope {-slope:.4f} over {len(points)} points")
    return float(-slope)
