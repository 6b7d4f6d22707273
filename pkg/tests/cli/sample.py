from collections.abc import Callable
from pathlib import Path
from typing import Any

TWriteConfig = Callable[..., Path]


def op_config(**overrides: Any) -> dict[str, Any]:
    """Outage sweep over unit-power links, N = 2, three SNR points."""
    config: dict[str, Any] = {
        "schema_version": 1,
        "scenario": "op",
        "system": {
            "elements": [2],
            "source_irs": {"m": 2, "omega": 2},
            "irs_destination": {"m": 1, "omega": 1},
        },
        "methods": ["exact", "upper", "series", "gamma", "clt"],
        "rho_grid_db": [0, 10, 20],
        "gamma_th_db": 5,
    }
    config.update(overrides)
    return config
