"""Exception hierarchy shared by every module of the package."""


class ColorDesignsError(Exception):
    """Base class for all errors raised by colordesigns."""


class NotPrime(ColorDesignsError, ValueError):
    pass


class NotIrreducible(ColorDesignsError, ValueError):
    pass


class NotPrimitive(ColorDesignsError, ValueError):
    pass


class DivisionByZero(ColorDesignsError, ZeroDivisionError):
    pass


class NotSquareOrder(ColorDesignsError, ValueError):
    """Raised when a Hermitian/Frobenius operation needs sqrt(q) integral."""


class IncompatibleCyclotomicOrder(ColorDesignsError, ValueError):
    pass


class DimensionMismatch(ColorDesignsError, ValueError):
    pass


class IndexOutOfRange(ColorDesignsError, IndexError):
    pass


class AlphabetMismatch(ColorDesignsError, ValueError):
    pass


class MissingRule(ColorDesignsError, KeyError):
    pass


class KindMismatch(ColorDesignsError, ValueError):
    pass


class CapExceeded(ColorDesignsError, RuntimeError):
    pass


class NonIntegerCoefficient(ColorDesignsError, ArithmeticError):
    """Internal consistency failure: a quantity that must be integral is not."""


class CrossCheckMismatch(ColorDesignsError, AssertionError):
    """Counting verdict and polynomial verdict disagree. Must never fire."""


class PreconditionError(ColorDesignsError, ValueError):
    pass
