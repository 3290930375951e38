class ItaldomError(Exception):
    """Base class for library errors."""


class ParseError(ItaldomError, ValueError):
    """Malformed digraph file or family description."""


class GuardError(ItaldomError):
    """Instance is larger than an operation's size guard."""


class BondageUndefinedError(ItaldomError):
    """Raised when gamma_I(D) == n, so no arc removal can raise it."""
