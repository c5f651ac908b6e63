"""Exception hierarchy shared by every module."""


class EdgeIdealError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EdgeIdealError, ValueError):
    """Malformed input: bad vertex ids, non-edges, invalid subsets."""


class DomainError(EdgeIdealError, ValueError):
    """Input is well formed but the quantity is undefined for it."""


class ResourceError(EdgeIdealError):
    """A configured enumeration or search cutoff would be exceeded."""


class ParseError(InputError):
    """Edge-list text could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
