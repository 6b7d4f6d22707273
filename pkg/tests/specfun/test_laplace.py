# ruff: noqa: S101
import math

import numpy as np
import pytest

from lib.configs import InvLaplaceConfig
from lib.errors import InversionConvergenceError
from lib.specfun import inverse_laplace, inverse_laplace_batch

TIMES = [0.05, 0.5, 1.0, 2.0, 5.0]
TALBOT = InvLaplaceConfig(method="talbot", method_order=32)
DEHOOG = InvLaplaceConfig(method="dehoog")


@pytest.fixture(params=[TALBOT, DEHOOG], ids=["talbot", "dehoog"])
def config(request: pytest.FixtureRequest) -> InvLaplaceConfig:
    return request.param


class TestInverseLaplace:
    def test_exponential(self, config: InvLaplaceConfig) -> None:
        for t in TIMES:
            assert inverse_laplace(lambda s: 1 / (s + 1), t, config) == pytest.approx(math.exp(-t), rel=1e-7)

    def test_ramp(self, config: InvLaplaceConfig) -> None:
        values = inverse_laplace_batch(lambda s: 1 / s**2, TIMES, config)
        assert values == pytest.approx(TIMES, rel=1e-7)

    def test_branch_point(self, config: InvLaplaceConfig) -> None:
        for t in TIMES:
            value = inverse_laplace(lambda s: 1 / np.sqrt(s), t, config)
            assert value == pytest.approx(1 / math.sqrt(math.pi * t), rel=1e-6)

    def test_batch_keeps_input_order(self) -> None:
        times = [3.0, 0.02, 0.7, 8.0]
        values = inverse_laplace_batch(lambda s: 1 / (s + 0.5), times, DEHOOG)
        assert values == pytest.approx([math.exp(-0.5 * t) for t in times], rel=1e-7, abs=1e-12)


class TestInverseLaplaceFailures:
    def test_delayed_step_breaks_talbot(self) -> None:
        # exp(-s) grows without bound on the left half of the Talbot contour
        with pytest.raises(InversionConvergenceError):
            inverse_laplace(lambda s: np.exp(-s) / s, 0.5, TALBOT)

    def test_non_positive_time(self) -> None:
        with pytest.raises(ValueError, match="t > 0"):
            inverse_laplace(lambda s: 1 / s, 0.0)
