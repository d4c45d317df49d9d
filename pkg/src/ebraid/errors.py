"""Exception types raised across the package."""


class EbraidError(Exception):
    """Base class for all errors raised by ebraid."""


class MalformedBraid(EbraidError, ValueError):
    pass


class IndexOutOfRange(EbraidError, IndexError):
    pass


class PositionOutOfRange(EbraidError, IndexError):
    pass


class LengthMismatch(EbraidError, ValueError):
    pass


class TooManyCrossings(EbraidError):
    pass


class TooManyStrands(EbraidError):
    pass


class ComponentNotIntegral(EbraidError, ArithmeticError):
    pass


class DifferentialNotSquareZero(EbraidError, AssertionError):
    """A constructed differential failed d∘d = 0; always an internal bug."""


class SignSystemInconsistent(EbraidError, AssertionError):
    """No unit-valued sign assignment satisfies every face; always an internal bug."""


class MethodDisagreement(EbraidError):
    def __init__(self, values: dict):
        self.values = values
        super().__init__("methods disagree: " + ", ".join(f"{k}={v}" for k, v in values.items()))
