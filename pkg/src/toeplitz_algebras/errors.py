"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`ToeplitzAlgebraError`, so the CLI can map it to a precondition
failure (exit status 2) and report ``type(err).__name__``.
"""


class ToeplitzAlgebraError(Exception):
    """Base class for all library errors."""


class DivisionByZeroPoly(ToeplitzAlgebraError, ZeroDivisionError):
    pass


class BothZero(ToeplitzAlgebraError, ValueError):
    pass


class NotCoprime(ToeplitzAlgebraError, ValueError):
    pass


class NotMonic(ToeplitzAlgebraError, ValueError):
    pass


class InvalidParameters(ToeplitzAlgebraError, ValueError):
    pass


class ShapeMismatch(ToeplitzAlgebraError, ValueError):
    pass


class OrderOutOfRange(ToeplitzAlgebraError, IndexError):
    pass


class InvalidPermutation(ToeplitzAlgebraError, ValueError):
    pass


class InvalidSpec(ToeplitzAlgebraError, ValueError):
    pass


class ModulusMismatch(ToeplitzAlgebraError, ValueError):
    pass


class Inconsistent(ToeplitzAlgebraError, ValueError):
    pass


class NotClosed(ToeplitzAlgebraError, ValueError):
    pass


class NotMaximalInput(ToeplitzAlgebraError, ValueError):
    """The generator set does not span a maximal algebra."""


class OffsetGcdMismatch(NotMaximalInput):
    pass


class NoGenericElement(NotMaximalInput):
    pass


class XiInconsistent(NotMaximalInput):
    pass


class PreconditionError(ToeplitzAlgebraError, ValueError):
    pass


class UnknownSuite(ToeplitzAlgebraError, KeyError):
    pass
