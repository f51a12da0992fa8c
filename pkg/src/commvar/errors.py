"""Exception hierarchy shared by the library and the command line."""


class CommvarError(Exception):
    """Base class for all library errors."""


class InputError(CommvarError, ValueError):
    """Malformed or out-of-domain input (bad rank, invalid partition, ...)."""


class UnsupportedLocusError(InputError):
    """The requested locus is not defined for this Lie type."""


class DomainError(InputError):
    """A formula was evaluated outside the range where it is stated."""


class ResourceError(CommvarError, RuntimeError):
    """A configured work limit was exceeded.

    ``limit`` names the limit that was hit, e.g. ``"max_pairs"``.
    """

    def __init__(self, message, limit=None):
        super().__init__(message)
        self.limit = limit
