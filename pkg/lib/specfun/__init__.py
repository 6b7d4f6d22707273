from .bessel import bessel_k
from .gamma import log_gamma, log_pochhammer, pochhammer
from .gaussian import gaussian_q
from .laplace import inverse_laplace, inverse_laplace_batch
from .meijer import meijer_g_2L_L2

__all__ = (
    "bessel_k",
    "gaussian_q",
    "inverse_laplace",
    "inverse_laplace_batch",
    "log_gamma",
    "log_pochhammer",
    "meijer_g_2L_L2",
    "pochhammer",
)
