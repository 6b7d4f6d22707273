from .numerics_conf import EvaluationSettings, InvLaplaceConfig, MellinBarnesConfig, SeriesConfig, TInversionMethod
from .sim_conf import McConfig

__all__ = (
    "EvaluationSettings",
    "InvLaplaceConfig",
    "McConfig",
    "MellinBarnesConfig",
    "SeriesConfig",
    "TInversionMethod",
)
