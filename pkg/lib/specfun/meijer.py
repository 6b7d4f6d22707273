"""Meijer G^{2,L}_{L,2} evaluated on a vertical Mellin-Barnes line.

The function handled here is

    G(z) = 1/(2 pi i) * int Gamma(-u) Gamma(1/2 - u) prod_j Gamma(m_j + u) z^u du,   m_j = 1 - a_j,

which is the kernel of the moment generating function of a product of Nakagami amplitudes.
"""

import cmath
import logging
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import NDArray
from scipy import special

from lib.configs import MellinBarnesConfig
from lib.errors import ContourPlacementError, ConvergenceError, SpecialFunctionOverflowError

logger = logging.getLogger(__name__)

_TAIL_RATIO = 1e-16
_MAX_HEIGHT_DOUBLINGS = 4

TLineIntegrand = Callable[[NDArray[np.float64]], NDArray[np.complex128]]


def contour_shift(shapes: Sequence[float], modulus: float, requested: float | None = None) -> float:
    """Real part of the integration line.

    Must lie strictly between the left pole family (at -m_j - k) and the right one (at k and k + 1/2).
    """
    m_min = min(shapes)
    if m_min <= 0:
        raise ContourPlacementError(f"shapes must be positive to separate the pole families, got {m_min:g}")
    if requested is not None:
        if not -m_min < requested < 0:
            raise ContourPlacementError(f"contour shift {requested:g} is outside ({-m_min:g}, 0)")
        return requested
    margin = min(0.25, m_min / 2)
    # small |z| favours a line next to the first right pole, large |z| one next to the left poles
    return -margin if modulus < 1 else -m_min + margin


def trapezoid_line(integrand: TLineIntegrand, cfg: MellinBarnesConfig) -> complex:
    """Integrate over the real line by nested trapezoid refinement."""
    height = cfg.truncation_height
    half = cfg.node_count // 2
    for _ in range(_MAX_HEIGHT_DOUBLINGS + 1):
        step = height / half
        values = integrand(step * np.arange(-half, half + 1))
        if not np.all(np.isfinite(values)):
            raise SpecialFunctionOverflowError("Mellin-Barnes integrand is not finite on the line")
        peak = np.abs(values).max()
        if np.abs(values[[0, -1]]).max() <= _TAIL_RATIO * peak:
            break
        logger.debug(f"Tail of the line integrand too heavy at height {height:g}, doubling")
        height *= 2
        half *= 2
    else:
        raise ConvergenceError(f"Mellin-Barnes integrand has not decayed at height {height:g}")

    total = step * values.sum()
    for refinement in range(cfg.max_refinements):
        midpoints = step * (np.arange(-half, half) + 0.5)
        refined = 0.5 * total + 0.5 * step * integrand(midpoints).sum()
        step /= 2
        half *= 2
        if abs(refined - total) <= cfg.rel_tol * abs(refined) or refined == total:
            logger.debug(f"Line integral converged after {refinement + 1} refinements with {2 * half + 1} nodes")
            return complex(refined)
        total = refined
    raise ConvergenceError(f"Mellin-Barnes trapezoid did not reach rel_tol={cfg.rel_tol:g}")


def meijer_g_2L_L2(  # noqa: N802
    upper: Sequence[float],
    x: complex,
    cfg: MellinBarnesConfig | None = None,
) -> complex:
    """Evaluate G^{2,L}_{L,2}[x | a_1..a_L ; 0, 1/2].

    Args:
        upper: The upper parameters a_j; each must satisfy a_j < 1.
        x: Argument, real or complex with |arg x| < (L + 2) pi / 2.
        cfg: Line placement and refinement settings.
    """
    cfg = cfg or MellinBarnesConfig()
    shapes = 1.0 - np.asarray(upper, dtype=float)
    if shapes.size == 0:
        raise ContourPlacementError("at least one upper parameter is required")
    if np.any(shapes <= 0):
        raise ContourPlacementError(f"upper parameters must be below 1, got {list(upper)}")

    z = complex(x)
    if z == 0:
        return complex(np.sqrt(np.pi) * np.prod(special.gamma(shapes)))
    order = shapes.size
    if abs(cmath.phase(z)) >= (order + 2) * np.pi / 2:
        raise ConvergenceError(f"|arg x| = {abs(cmath.phase(z)):.4f} is outside the convergence sector")

    shift = contour_shift(shapes.tolist(), abs(z), cfg.contour_shift)
    log_z = cmath.log(z)

    def integrand(y: NDArray[np.float64]) -> NDArray[np.complex128]:
        u = shift + 1j * y
        log_terms = special.loggamma(-u) + special.loggamma(0.5 - u) + u * log_z
        for m in shapes:
            log_terms = log_terms + special.loggamma(m + u)
        return np.exp(log_terms) / (2 * np.pi)

    return trapezoid_line(integrand, cfg)
