"""
Exception hierarchy shared by the library and the command-line front end.
"""


class SymmetricSystemError(Exception):
    """Base class for every error raised by this package."""


class ConstructionError(SymmetricSystemError, ValueError):
    """A system or graph could not be built from the given parameters."""


class VertexCapExceeded(ConstructionError):
    """The graph would exceed the configured vertex cap."""


class InvalidVertexSet(SymmetricSystemError, ValueError):
    pass


class InvalidPermutation(SymmetricSystemError, ValueError):
    pass


class PreconditionError(SymmetricSystemError, ValueError):
    """An operation was called outside its stated precondition."""


class SearchCapExceeded(SymmetricSystemError):
    """An exact search ran past its node budget."""


class GraphFormatError(SymmetricSystemError, ValueError):
    pass


class ConfigurationError(SymmetricSystemError, ValueError):
    pass
