"""Exception hierarchy. Each class name doubles as the error code in reports."""


class DfiLabError(Exception):
    """Base class for every error raised by the library."""

    code = "DfiLabError"

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.code = cls.__name__


class InputError(DfiLabError):
    """Malformed or inconsistent input."""


class CapExceeded(DfiLabError):
    """A configured size or step budget was exceeded."""


class NotPure(InputError):
    pass


class MinorTooLarge(InputError):
    pass


class RankTooLarge(InputError):
    pass


class WrongShape(InputError):
    pass


class LozengeViolated(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotBounded(InputError):
    pass


class HypothesisFailed(DfiLabError):
    pass


class BudgetExceeded(CapExceeded):
    pass


class ComplexTooLarge(CapExceeded):
    pass


class LatticeTooLarge(CapExceeded):
    pass


class OracleTooLarge(CapExceeded):
    pass


class DifferentialBroken(AssertionError, DfiLabError):
    """d o d != 0. Indicates a bug, never bad input."""
