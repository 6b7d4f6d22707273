"""Numerical inversion of Laplace transforms.

Two contour schemes are available. The fixed Talbot contour bends into the left half plane, so it
needs a transform that is analytic there. The de Hoog series samples a vertical line in Re s > 0 and
accelerates the trapezoid sum with a continued fraction. Transforms that only exist in the right half
plane (Mellin-Barnes moment generating functions, for one) must use de Hoog.
"""

import logging
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import NDArray

from lib.configs import InvLaplaceConfig, TInversionMethod
from lib.errors import InversionConvergenceError

logger = logging.getLogger(__name__)

TTransform = Callable[[complex], complex]


def _talbot(transform: TTransform, times: NDArray[np.float64], order: int, scale: float) -> NDArray[np.float64]:
    theta = np.arange(order) * np.pi / order
    cot = np.zeros(order)
    cot[1:] = 1 / np.tan(theta[1:])
    sigma = theta + (theta * cot - 1) * cot

    results = np.empty(times.size)
    for index, t in enumerate(times):
        r = 2 * order / (5 * t * scale)
        nodes = r * theta * (cot + 1j)
        nodes[0] = r
        values = np.array([transform(p) for p in nodes], dtype=np.complex128)
        weights = np.exp(t * nodes) * (1 + 1j * sigma)
        weights[0] = np.exp(r * t) / 2
        results[index] = r / order * np.real(np.dot(weights, values))
    return results


def _dehoog_block(
    transform: TTransform,
    times: NDArray[np.float64],
    order: int,
    scale: float,
    tol: float,
) -> NDArray[np.float64]:
    period = 2 * times.max() * scale
    damping = -np.log(tol) / (2 * period)
    size = 2 * order + 1

    nodes = damping + 1j * np.pi * np.arange(size) / period
    fp = np.array([transform(p) for p in nodes], dtype=np.complex128)

    # quotient-difference table, row index is the superscript
    e = np.zeros((size, order + 1), dtype=np.complex128)
    q = np.zeros((size, order), dtype=np.complex128)
    q[0, 0] = fp[1] / (fp[0] / 2)
    q[1 : 2 * order, 0] = fp[2 : 2 * order + 1] / fp[1 : 2 * order]
    for r in range(1, order + 1):
        mr = 2 * (order - r)
        e[0:mr, r] = q[1 : mr + 1, r - 1] - q[0:mr, r - 1] + e[1 : mr + 1, r - 1]
        if r < order:
            mr = 2 * (order - r) - 1
            q[0:mr, r] = q[1 : mr + 1, r - 1] * e[1 : mr + 1, r] / e[0:mr, r]

    d = np.zeros(size, dtype=np.complex128)
    d[0] = fp[0] / 2
    for r in range(1, order + 1):
        d[2 * r - 1] = -q[0, r - 1]
        d[2 * r] = -e[0, r]

    z = np.exp(1j * np.pi * times / period)
    a_prev, a_curr = np.zeros_like(z), np.full_like(z, d[0])
    b_prev, b_curr = np.ones_like(z), np.ones_like(z)
    for i in range(1, 2 * order):
        a_prev, a_curr = a_curr, a_curr + d[i] * a_prev * z
        b_prev, b_curr = b_curr, b_curr + d[i] * b_prev * z

    # improved remainder of the continued fraction
    brem = (1 + (d[2 * order - 1] - d[2 * order]) * z) / 2
    rem = -brem * (1 - np.sqrt(1 + d[2 * order] * z / brem**2))
    a_last = a_curr + rem * a_prev
    b_last = b_curr + rem * b_prev
    return np.exp(damping * times) / period * np.real(a_last / b_last)


def _dehoog(transform: TTransform, times: NDArray[np.float64], order: int, scale: float, tol: float) -> NDArray:
    # one shared period per decade of t; a single period over several decades loses the small times
    results = np.empty(times.size)
    decades = np.floor(np.log10(times)).astype(int)
    for decade in np.unique(decades):
        mask = decades == decade
        results[mask] = _dehoog_block(transform, times[mask], order, scale, tol)
    return results


def _invert(
    transform: TTransform,
    times: NDArray[np.float64],
    method: TInversionMethod,
    order: int,
    cfg: InvLaplaceConfig,
) -> NDArray[np.float64]:
    if method == "talbot":
        return _talbot(transform, times, order, cfg.scale_hint)
    return _dehoog(transform, times, order, cfg.scale_hint, cfg.dehoog_tol)


def inverse_laplace_batch(
    transform: TTransform,
    times: Sequence[float] | NDArray[np.float64],
    cfg: InvLaplaceConfig | None = None,
) -> NDArray[np.float64]:
    """Invert `transform` at every positive time.

    The result at the configured order is checked against a higher order; disagreement raises
    `InversionConvergenceError`.
    """
    cfg = cfg or InvLaplaceConfig()
    ts = np.asarray(times, dtype=float).ravel()
    if ts.size == 0:
        return ts
    if np.any(ts <= 0) or not np.all(np.isfinite(ts)):
        msg = "inverse Laplace transform needs finite t > 0"
        raise ValueError(msg)

    coarse = _invert(transform, ts, cfg.method, cfg.method_order, cfg)
    finer_order = cfg.method_order + max(4, cfg.method_order // 4)
    fine = _invert(transform, ts, cfg.method, finer_order, cfg)
    if not np.all(np.isfinite(fine)):
        raise InversionConvergenceError(f"{cfg.method} inversion produced non-finite values")

    gap = np.abs(fine - coarse)
    allowed = cfg.rel_tol * np.abs(fine) + cfg.abs_tol
    if np.any(gap > allowed):
        worst = int(np.argmax(gap - allowed))
        raise InversionConvergenceError(
            f"{cfg.method} inversion at t={ts[worst]:g} moved by {gap[worst]:.3e} between orders "
            f"{cfg.method_order} and {finer_order}"
        )
    logger.debug(f"Inverted {ts.size} points with {cfg.method}, max order gap {gap.max():.2e}")
    return fine


def inverse_laplace(transform: TTransform, t: float, cfg: InvLaplaceConfig | None = None) -> float:
    return float(inverse_laplace_batch(transform, [t], cfg)[0])
