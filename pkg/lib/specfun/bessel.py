import numpy as np
from scipy import special

from lib.errors import SpecialFunctionOverflowError


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind, K_nu(x), for x > 0.

    Integer orders go through the same routine; K is even in nu.
    """
    if x <= 0:
        msg = f"bessel_k is defined for x > 0, got {x:g}"
        raise ValueError(msg)
    value = float(special.kv(nu, x))
    if np.isinf(value):
        raise SpecialFunctionOverflowError(f"K_{nu:g}({x:g}) overflows double precision")
    return value
