# ruff: noqa: S101
import math

import numpy as np
import pytest
from scipy import integrate

from lib import nakagami
from lib.nakagami import NakagamiParams
from lib.sumprod import (
    SumProductModel,
    branch_mgf_exact,
    cdf_numeric,
    double_product_pdf_closed,
    mgf_exact,
    pdf_numeric,
    sample_H,
)

M1, M2, OMEGA1, OMEGA2 = 1.3, 2.1, 1.0, 1.5
BRANCH = (NakagamiParams(m=M1, omega=OMEGA1), NakagamiParams(m=M2, omega=OMEGA2))
SEED = 7


def closed_pdf(x: float) -> float:
    return double_product_pdf_closed(M1, M2, OMEGA1, OMEGA2, x)


class TestClosedForm:
    def test_normalised(self) -> None:
        total, _ = integrate.quad(closed_pdf, 0, math.inf)
        assert total == pytest.approx(1.0, rel=1e-9)

    def test_mean(self) -> None:
        mean, _ = integrate.quad(lambda x: x * closed_pdf(x), 0, math.inf)
        expected = nakagami.moment(BRANCH[0], 1) * nakagami.moment(BRANCH[1], 1)
        assert mean == pytest.approx(expected, rel=1e-8)

    def test_origin(self) -> None:
        assert closed_pdf(0.0) == 0.0


class TestMgfExact:
    def test_single_factor_is_nakagami(self) -> None:
        model = SumProductModel(columns=((BRANCH[0],),))
        assert mgf_exact(model, 2.3) == pytest.approx(nakagami.mgf_exact(BRANCH[0], 2.3), rel=1e-12)

    @pytest.mark.parametrize("s", [0.5, 2.0, 7.0])
    def test_double_against_closed_density(self, s: float) -> None:
        expected, _ = integrate.quad(lambda x: closed_pdf(x) * math.exp(-s * x), 0, math.inf, epsabs=1e-14)
        assert branch_mgf_exact(BRANCH, s) == pytest.approx(expected, rel=1e-7)

    def test_sum_is_power_of_branch(self) -> None:
        model = SumProductModel.iid(BRANCH, 3)
        assert mgf_exact(model, 1.1) == pytest.approx(branch_mgf_exact(BRANCH, 1.1) ** 3, rel=1e-14)

    def test_zero(self) -> None:
        assert mgf_exact(SumProductModel.iid(BRANCH, 2), 0) == 1.0

    @pytest.mark.slow
    def test_against_monte_carlo(self) -> None:
        column = (BRANCH[0], BRANCH[1], NakagamiParams(m=0.8, omega=0.5))
        model = SumProductModel(columns=(column, column, column[::-1]))
        draws = np.exp(-0.7 * sample_H(model, np.random.default_rng(SEED), 1_000_000))
        sigma = draws.std() / math.sqrt(draws.size)
        assert abs(mgf_exact(model, 0.7) - draws.mean()) < 4 * sigma


class TestInversion:
    @pytest.mark.parametrize("h", [0.3, 0.8, 1.5, 2.5])
    def test_density_against_closed_form(self, h: float) -> None:
        model = SumProductModel(columns=(BRANCH,))
        assert pdf_numeric(model, h) == pytest.approx(closed_pdf(h), rel=1e-5, abs=1e-9)

    def test_cdf_against_quadrature(self) -> None:
        model = SumProductModel(columns=(BRANCH,))
        expected, _ = integrate.quad(closed_pdf, 0, 1.2)
        assert cdf_numeric(model, 1.2) == pytest.approx(expected, rel=1e-5)

    def test_cdf_is_integral_of_density(self) -> None:
        model = SumProductModel.iid(BRANCH, 2)
        grid = np.linspace(1e-3, 2.5, 1500)
        area = integrate.trapezoid(pdf_numeric(model, grid), grid)
        assert cdf_numeric(model, 2.5) == pytest.approx(area, rel=1e-4)

    def test_cdf_limits(self) -> None:
        model = SumProductModel.iid(BRANCH, 2)
        values = cdf_numeric(model, [0.0, 0.5, 2.0, 20.0])
        assert values[0] == 0.0
        assert np.all(np.diff(values) > 0)
        assert values[-1] == pytest.approx(1.0, abs=1e-6)

    def test_non_positive_points(self) -> None:
        model = SumProductModel(columns=(BRANCH,))
        assert pdf_numeric(model, [-1.0, 0.0]).tolist() == [0.0, 0.0]
