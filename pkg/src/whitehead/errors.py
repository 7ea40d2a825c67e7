"""Exception types shared across the package."""


class WhiteheadError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(WhiteheadError, ValueError):
    """Input text does not follow the word grammar."""


class TrivialRelatorError(WhiteheadError, ValueError):
    """A relator reduced to the trivial element or trivial class."""


class BasisMismatchError(WhiteheadError, KeyError):
    """A word mentions a generator outside the basis it is used with."""


class PreconditionError(WhiteheadError, ValueError):
    """An operation was called with arguments violating its contract."""


class InvariantError(WhiteheadError, RuntimeError):
    """An internal invariant failed. Always indicates a bug."""
