import numpy as np
from scipy import special

from lib.errors import GammaPoleError


def _is_pole(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and float(z.real).is_integer()


def log_gamma(z: complex | float) -> complex | float:
    """Principal branch of log Gamma.

    Real positive arguments return a float; anything else a complex on the principal branch.
    """
    if isinstance(z, (int, float, np.floating, np.integer)) and z > 0:
        return float(special.gammaln(z))
    zc = complex(z)
    if _is_pole(zc):
        raise GammaPoleError(f"log_gamma has a pole at {zc.real:g}")
    return complex(special.loggamma(zc))


def pochhammer(x: float, n: float) -> float:
    """Rising factorial (x)_n = Gamma(x + n) / Gamma(x) for real n of either sign."""
    if _is_pole(complex(x)):
        raise GammaPoleError(f"pochhammer({x:g}, {n:g}) needs Gamma({x:g}), which has a pole")
    if n == 0:
        return 1.0
    if _is_pole(complex(x + n)):
        raise GammaPoleError(f"pochhammer({x:g}, {n:g}) hits a pole of Gamma({x + n:g})")
    value = float(special.poch(x, n))
    if not np.isfinite(value):
        raise GammaPoleError(f"pochhammer({x:g}, {n:g}) is not finite")
    return value


def log_pochhammer(x: float, n: float) -> float:
    """log (x)_n for x > 0 and x + n > 0."""
    if x <= 0 or x + n <= 0:
        raise GammaPoleError(f"log_pochhammer needs positive arguments, got x={x:g}, x+n={x + n:g}")
    return float(special.gammaln(x + n) - special.gammaln(x))
