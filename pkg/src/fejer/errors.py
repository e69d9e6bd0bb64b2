"""Exception types raised by the package.

Everything derives from ``FejerError``; configuration-type problems are also
``ValueError`` (or ``IndexError``) so callers can catch them generically.
"""


class FejerError(Exception):
    """Base class for all package errors."""


class NotLacunary(FejerError, ValueError):
    pass


class EmptySequence(FejerError, ValueError):
    pass


class NonPositiveTerm(FejerError, ValueError):
    pass


class InvalidAlpha(FejerError, ValueError):
    pass


class AliasingRisk(FejerError, ValueError):
    """A kernel order or signal band does not fit on the grid."""


class IndexOutOfRange(FejerError, IndexError):
    pass


class LengthMismatch(FejerError, ValueError):
    pass


class GridMismatch(FejerError, ValueError):
    pass


class ZeroSignal(FejerError, ValueError):
    pass
