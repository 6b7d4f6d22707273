"""Exception hierarchy shared by the numerical core."""


class NumericsError(Exception):
    """Base class for every failure raised by the numerical core."""


class GammaPoleError(NumericsError, ValueError):
    pass


class SpecialFunctionOverflowError(NumericsError, OverflowError):
    pass


class ContourPlacementError(NumericsError):
    """No vertical line separates the left and right pole families."""


class ConvergenceError(NumericsError):
    """A refinement loop hit its limit without meeting the tolerance."""


class InversionConvergenceError(ConvergenceError):
    pass


class TermCountError(NumericsError):
    def __init__(self, count: int, limit: int) -> None:
        super().__init__(f"series needs {count} terms, limit is {limit}")
        self.count = count
        self.limit = limit


class MethodUnavailableError(NumericsError):
    pass


class DegenerateOrderError(NumericsError, ValueError):
    """Asymptotic forms need a strictly smallest shape per column."""


class AsymptoticRegimeError(NumericsError, ValueError):
    pass


class DegenerateFitError(NumericsError, ValueError):
    pass
