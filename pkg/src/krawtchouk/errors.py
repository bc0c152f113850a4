"""Exception hierarchy shared by every module."""


class KrawtchoukError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KrawtchoukError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(KrawtchoukError):
    """A configured size cap would be exceeded."""


class ConsistencyError(KrawtchoukError, ArithmeticError):
    """An exactness guarantee failed (e.g. a division that must be exact was not).

    This signals a corrupted input matrix rather than a user mistake.
    """
