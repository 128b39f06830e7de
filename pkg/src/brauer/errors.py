"""Exception hierarchy shared across the package.

Every error raised by library code derives from BrauerError, so callers can
catch the whole family at once; most also derive from the closest builtin
(ValueError, ArithmeticError, ZeroDivisionError) to stay idiomatic.
"""


class BrauerError(Exception):
    pass


class InversionOfZero(BrauerError, ZeroDivisionError):
    pass


class ZeroInput(BrauerError, ValueError):
    pass


class PoleAtEvaluationPoint(BrauerError, ArithmeticError):
    """A shifted evaluation was requested with too small a shift exponent."""


class ModularDegeneration(BrauerError, ArithmeticError):
    """A denominator that is nonzero symbolically vanished mod p."""


class IndexOutOfRange(BrauerError, ValueError):
    pass


class SizeMismatch(BrauerError, ValueError):
    pass


class FieldModeMismatch(BrauerError, ValueError):
    pass


class BoundExceeded(BrauerError, ValueError):
    pass


class ShrinkNotAllowed(BrauerError, ValueError):
    pass


class ShapeParityMismatch(BrauerError, ValueError):
    pass


class ZeroFactor(BrauerError, ArithmeticError):
    pass


class ContentCollision(BrauerError, ArithmeticError):
    pass


class ZeroValue(BrauerError, ArithmeticError):
    pass


class NotAllAdditions(BrauerError, ValueError):
    pass


class NotProportional(BrauerError, ArithmeticError):
    pass


class DegenerateParameters(BrauerError, ValueError):
    pass


class DegeneratePoints(BrauerError, ValueError):
    pass


class CrossCheckFailed(BrauerError, AssertionError):
    """Two independent computations of the same quantity disagree."""
