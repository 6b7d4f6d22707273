from .errors import (
    AsymptoticRegimeError,
    ContourPlacementError,
    ConvergenceError,
    DegenerateFitError,
    DegenerateOrderError,
    GammaPoleError,
    InversionConvergenceError,
    MethodUnavailableError,
    NumericsError,
    SpecialFunctionOverflowError,
    TermCountError,
)
from .nakagami import NakagamiParams

__all__ = (
    "AsymptoticRegimeError",
    "ContourPlacementError",
    "ConvergenceError",
    "DegenerateFitError",
    "DegenerateOrderError",
    "GammaPoleError",
    "InversionConvergenceError",
    "MethodUnavailableError",
    "NakagamiParams",
    "NumericsError",
    "SpecialFunctionOverflowError",
    "TermCountError",
)
