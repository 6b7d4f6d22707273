# ruff: noqa: S101
from collections.abc import Callable

import pytest

from lib.errors import AsymptoticRegimeError
from lib.irs import IrsModel, MetricMethod, diversity_order, empirical_diversity_slope, outage_curve

TLinkFactory = Callable[..., IrsModel]

RHOS = [10 ** (v / 10) for v in range(10, 71)]
HIGH_SNR_REGIME = (1e-7, 1e-4)


def regime_curve(model: IrsModel, method: MetricMethod) -> list[tuple[float, float]]:
    values = outage_curve(model, 1.0, RHOS, method)
    return [(rho, float(v)) for rho, v in zip(RHOS, values, strict=True) if v >= HIGH_SNR_REGIME[0]]


class TestDiversityOrder:
    def test_cascaded(self, make_link: TLinkFactory) -> None:
        assert diversity_order(make_link(3)) == 3
        assert diversity_order(make_link(2, m_id=1.5, m_si=2.5)) == 3

    def test_with_direct_link(self, make_link: TLinkFactory) -> None:
        assert diversity_order(make_link(2, m_sd=1.5)) == pytest.approx(3.5)

    def test_miso(self, make_link: TLinkFactory) -> None:
        assert diversity_order(make_link(2).model_copy(update={"antennas": 3})) == 6


class TestEmpiricalSlope:
    def test_bound_slope_is_exact(self, make_link: TLinkFactory) -> None:
        model = make_link(3)
        curve = list(zip(RHOS, outage_curve(model, 1.0, RHOS, MetricMethod.UPPER_BOUND), strict=True))
        assert empirical_diversity_slope(curve) == pytest.approx(diversity_order(model), rel=1e-9)

    @pytest.mark.parametrize(
        "link",
        [
            {"elements": 2},
            {"elements": 3},
            {"elements": 2, "m_id": 1.5, "m_si": 2.5},
            {"elements": 2, "m_sd": 1.0},
        ],
        ids=["n2", "n3", "n2-m1.5", "n2-direct"],
    )
    def test_exact_slope(self, make_link: TLinkFactory, link: dict) -> None:
        model = make_link(**link)
        curve = regime_curve(model, MetricMethod.EXACT_NUMERIC)
        slope = empirical_diversity_slope(curve, regime_threshold=HIGH_SNR_REGIME[1])
        assert slope == pytest.approx(diversity_order(model), rel=0.05)

    def test_too_few_points(self) -> None:
        with pytest.raises(AsymptoticRegimeError):
            empirical_diversity_slope([(1.0, 0.5), (10.0, 1e-4)], regime_threshold=1e-3)

    def test_threshold_filters(self) -> None:
        curve = [(10.0**k, 10.0 ** (-2 * k)) for k in range(5)]
        assert empirical_diversity_slope(curve, regime_threshold=0.5) == pytest.approx(2.0)
