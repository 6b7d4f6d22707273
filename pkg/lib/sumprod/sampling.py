import numpy as np
from numpy.typing import NDArray

from lib import nakagami

from .model import SumProductModel, TColumn


def sample_columns(
    columns: tuple[TColumn, ...],
    rng: np.random.Generator,
    size: int,
) -> NDArray[np.float64]:
    total = np.zeros(size)
    for column in columns:
        product = np.ones(size)
        for params in column:
            product *= nakagami.sample(params, rng, size)
        total += product
    return total


def sample_H(  # noqa: N802
    model: SumProductModel,
    rng: np.random.Generator,
    size: int | None = None,
) -> NDArray[np.float64] | float:
    """Draw H by sampling every amplitude, multiplying down columns and summing across them."""
    draws = sample_columns(model.columns, rng, 1 if size is None else size)
    return float(draws[0]) if size is None else draws
