"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when arguments fall outside the domain where a result is defined."""


class BoundError(DomainError):
    """Raised when an enumeration request exceeds the supported size."""
