import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special


def gaussian_q(x: ArrayLike) -> NDArray[np.float64] | float:
    """Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2."""
    value = 0.5 * special.erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))
    return float(value) if np.ndim(value) == 0 else value
