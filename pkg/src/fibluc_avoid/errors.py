"""Exception types shared across the package."""


class AvoidError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulusError(AvoidError, ValueError):
    pass


class ResourceLimitError(AvoidError):
    """A computation would exceed a configured size or step cap."""


class InconsistencyError(AvoidError, ValueError):
    """Congruences that cannot hold simultaneously."""
