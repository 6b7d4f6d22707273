# ruff: noqa: S101
import math

import numpy as np

from lib import nakagami
from lib.nakagami import NakagamiParams
from lib.sumprod import SumProductModel, sample_H

COLUMN = (NakagamiParams(m=1, omega=1), NakagamiParams(m=2.5, omega=2))
MODEL = SumProductModel.iid(COLUMN, 4)


def test_reproducible() -> None:
    first = sample_H(MODEL, np.random.default_rng(3), 1000)
    second = sample_H(MODEL, np.random.default_rng(3), 1000)
    assert np.array_equal(first, second)


def test_scalar_draw() -> None:
    assert isinstance(sample_H(MODEL, np.random.default_rng(3)), float)


def test_mean() -> None:
    draws = sample_H(MODEL, np.random.default_rng(11), 200_000)
    expected = 4 * math.prod(nakagami.moment(p, 1) for p in COLUMN)
    assert abs(draws.mean() - expected) < 4 * draws.std() / math.sqrt(draws.size)
