# ruff: noqa: S101
import math

import mpmath
import pytest

from lib.errors import GammaPoleError, SpecialFunctionOverflowError
from lib.specfun import bessel_k, gaussian_q, log_gamma, log_pochhammer, pochhammer

LOG_GAMMA_HALF = 0.5723649429247001
K_HALF_AT_ONE = math.sqrt(math.pi / 2) * math.exp(-1)
K_ZERO_AT_ONE = 0.42102443824070834
Q_AT_ONE = 0.15865525393145707


class TestLogGamma:
    def test_real_positive(self) -> None:
        assert log_gamma(0.5) == pytest.approx(LOG_GAMMA_HALF, rel=1e-14)
        assert isinstance(log_gamma(3.0), float)

    @pytest.mark.parametrize("z", [3 + 4j, -2.5 + 0.1j, 0.2 - 7j])
    def test_principal_branch(self, z: complex) -> None:
        expected = complex(mpmath.loggamma(z))
        assert log_gamma(z) == pytest.approx(expected, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("z", [0, -1, -4.0, complex(-2, 0)])
    def test_poles_raise(self, z: complex) -> None:
        with pytest.raises(GammaPoleError):
            log_gamma(z)


class TestPochhammer:
    def test_integer_steps(self) -> None:
        assert pochhammer(3, 2) == pytest.approx(12.0)
        assert pochhammer(1.7, 0) == 1.0

    def test_negative_step(self) -> None:
        assert pochhammer(2, -1) == pytest.approx(1.0)
        assert pochhammer(2.5, -0.5) == pytest.approx(math.gamma(2.0) / math.gamma(2.5))

    def test_pole_raises(self) -> None:
        with pytest.raises(GammaPoleError):
            pochhammer(2, -2)

    @pytest.mark.parametrize(("x", "n"), [(-2, 0.5), (0, 1.5), (-1, 0)])
    def test_pole_of_base_raises(self, x: float, n: float) -> None:
        with pytest.raises(GammaPoleError):
            pochhammer(x, n)

    def test_log_matches(self) -> None:
        assert log_pochhammer(1.3, 2.2) == pytest.approx(math.log(pochhammer(1.3, 2.2)), rel=1e-12)


class TestBessel:
    def test_half_order_closed_form(self) -> None:
        assert bessel_k(0.5, 1.0) == pytest.approx(K_HALF_AT_ONE, rel=1e-13)

    def test_integer_order(self) -> None:
        assert bessel_k(0, 1.0) == pytest.approx(K_ZERO_AT_ONE, rel=1e-13)
        assert bessel_k(-1.0, 2.0) == pytest.approx(bessel_k(1.0, 2.0))

    def test_small_argument_overflow(self) -> None:
        with pytest.raises(SpecialFunctionOverflowError):
            bessel_k(200.0, 1e-10)

    def test_non_positive_argument(self) -> None:
        with pytest.raises(ValueError, match="x > 0"):
            bessel_k(1.0, 0.0)


def test_gaussian_q() -> None:
    assert gaussian_q(1.0) == pytest.approx(Q_AT_ONE, rel=1e-13)
    assert gaussian_q(0.0) == 0.5
    assert gaussian_q([0.0, 1.0])[1] == pytest.approx(Q_AT_ONE)
