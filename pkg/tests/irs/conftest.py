from collections.abc import Callable

import pytest

from lib.irs import IrsModel
from lib.nakagami import NakagamiParams


def _unit_power_link(elements: int, m_id: float = 1.0, m_si: float = 2.0, m_sd: float | None = None) -> IrsModel:
    return IrsModel(
        elements=elements,
        source_irs=NakagamiParams.unit_power(m_si),
        irs_destination=NakagamiParams.unit_power(m_id),
        direct=NakagamiParams.unit_power(m_sd) if m_sd is not None else None,
    )


@pytest.fixture
def make_link() -> Callable[..., IrsModel]:
    """Links with E[X^2] = 1 on every hop; m_SI = 2 and m_ID = 1 unless overridden."""
    return _unit_power_link


@pytest.fixture
def two_elements() -> IrsModel:
    return _unit_power_link(2)
