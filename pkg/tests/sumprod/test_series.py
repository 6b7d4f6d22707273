# ruff: noqa: S101
import logging

import pytest

from lib.configs import SeriesConfig
from lib.errors import TermCountError
from lib.nakagami import NakagamiParams
from lib.sumprod import (
    DoubleIidModel,
    branch_series_mgf,
    cdf_series,
    double_product_pdf_closed,
    iter_terms,
    mgf_exact,
    mgf_series,
    pdf_series,
    pdf_series_detailed,
    series_accumulate,
    series_evaluate,
    term_count,
)
from lib.sumprod.series import mgf_weight, offset_in_use

NON_INTEGER = DoubleIidModel(m1=0.7, m2=1.3, omega1=1, omega2=1, elements=2)
INTEGER = DoubleIidModel(m1=1, m2=2, omega1=1, omega2=2, elements=2)
NEAR_INTEGER = DoubleIidModel(m1=1, m2=2.0005, omega1=1, omega2=1, elements=2)
HALF_INTEGER = DoubleIidModel(m1=1, m2=2.5, omega1=1, omega2=1, elements=3)
DEFAULT = SeriesConfig()


def with_elements(model: DoubleIidModel, elements: int) -> DoubleIidModel:
    return DoubleIidModel(**(model.model_dump() | {"elements": elements}))


class TestTerms:
    def test_term_count(self) -> None:
        assert term_count(2, 1) == 10
        assert len(list(iter_terms(NON_INTEGER, SeriesConfig(order_I=1)))) == 10

    def test_paired_truncation_drops_terms(self) -> None:
        count = len(list(iter_terms(NEAR_INTEGER, SeriesConfig(order_I=2))))
        assert count < term_count(2, 2)

    def test_multiplicities_are_multinomial(self) -> None:
        model = with_elements(NON_INTEGER, 3)
        total = sum(term.multiplicity for term in iter_terms(model, SeriesConfig(order_I=0)))
        # order 0 leaves the single composition (3,) with inner indices 0..3
        assert total == 4

    def test_term_budget(self) -> None:
        with pytest.raises(TermCountError) as error:
            list(iter_terms(with_elements(NON_INTEGER, 40), SeriesConfig(order_I=8, max_terms=1000)))
        assert error.value.count == term_count(40, 8)


class TestMgfSeries:
    @pytest.mark.parametrize("model", [NON_INTEGER, INTEGER, NEAR_INTEGER, HALF_INTEGER], ids=str)
    @pytest.mark.parametrize("s", [8.0, 10.0, 15.0])
    def test_against_exact(self, model: DoubleIidModel, s: float) -> None:
        expected = mgf_exact(model.to_sum_product(), s)
        assert mgf_series(model, DEFAULT, s) == pytest.approx(expected, rel=1e-2)

    def test_error_shrinks_with_order(self) -> None:
        model = with_elements(NON_INTEGER, 3)
        expected = mgf_exact(model.to_sum_product(), 8.0)
        errors = [abs(mgf_series(model, SeriesConfig(order_I=order), 8.0) - expected) for order in range(1, 5)]
        assert errors == sorted(errors, reverse=True)

    @pytest.mark.parametrize("model", [NON_INTEGER, INTEGER, NEAR_INTEGER, HALF_INTEGER], ids=str)
    def test_multinomial_matches_branch_power(self, model: DoubleIidModel) -> None:
        multinomial = series_accumulate(model, DEFAULT, mgf_weight(8.0))
        assert multinomial == pytest.approx(branch_series_mgf(model, DEFAULT, 8.0), rel=1e-10)


class TestDensitySeries:
    @pytest.mark.parametrize("h", [0.2, 0.4, 0.6])
    @pytest.mark.parametrize("model", [NON_INTEGER, INTEGER], ids=str)
    def test_single_product_against_bessel_form(self, model: DoubleIidModel, h: float) -> None:
        single = with_elements(model, 1)
        expected = double_product_pdf_closed(single.m1, single.m2, single.omega1, single.omega2, h)
        assert pdf_series(single, DEFAULT, h) == pytest.approx(expected, rel=1e-3)

    def test_symmetric_offset(self) -> None:
        single = with_elements(INTEGER, 1)
        expected = double_product_pdf_closed(1, 2, 1, 2, 0.4)
        value = pdf_series(single, SeriesConfig(symmetric_offset=True), 0.4)
        assert value == pytest.approx(expected, rel=1e-3)

    def test_offset_reported(self) -> None:
        assert offset_in_use(INTEGER, DEFAULT) == pytest.approx(1e-4)
        assert offset_in_use(NON_INTEGER, DEFAULT) is None
        assert pdf_series_detailed(INTEGER, DEFAULT, 0.3).epsilon == pytest.approx(1e-4)

    def test_non_positive_argument(self) -> None:
        assert pdf_series(NON_INTEGER, DEFAULT, 0.0) == 0.0
        assert cdf_series(NON_INTEGER, DEFAULT, -1.0) == 0.0

    def test_cdf_increases(self) -> None:
        values = [cdf_series(NON_INTEGER, DEFAULT, h) for h in (0.1, 0.2, 0.4)]
        assert 0 < values[0] < values[1] < values[2] < 1


class TestReliability:
    UNIT_POWER = DoubleIidModel(
        m1=1,
        m2=2,
        omega1=NakagamiParams.unit_power(1).omega,
        omega2=NakagamiParams.unit_power(2).omega,
        elements=4,
    )

    def test_flags_unsettled_series_near_the_mode(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING):
            evaluation = pdf_series_detailed(self.UNIT_POWER, DEFAULT, 3.0)
        assert DEFAULT.order_I == 4
        assert evaluation.reliable is False
        assert evaluation.last_order_change > DEFAULT.reliability_tol
        assert evaluation.flags[-1] == "unreliable"
        assert "has not settled" in caplog.text

    def test_settled_close_to_origin(self) -> None:
        evaluation = pdf_series_detailed(with_elements(INTEGER, 1), DEFAULT, 0.2)
        assert evaluation.reliable
        assert evaluation.last_order_change < 1e-3
        assert "unreliable" not in evaluation.flags

    def test_order_zero_has_no_diagnostic(self) -> None:
        evaluation = series_evaluate(NON_INTEGER, SeriesConfig(order_I=0), mgf_weight(8.0), "s=8")
        assert evaluation.last_order_change is None
        assert evaluation.reliable

    def test_tolerance_is_configurable(self) -> None:
        loose = SeriesConfig(reliability_tol=1e6)
        assert pdf_series_detailed(self.UNIT_POWER, loose, 3.0).reliable
