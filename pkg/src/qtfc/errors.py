"""Exception types shared across the package."""


class QTFCError(Exception):
    """Base class for all package errors."""


class DomainError(QTFCError, ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceError(QTFCError):
    """A configured size cap was exceeded.

    ``partial`` may carry whatever was computed before the cap was hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class IncompleteResultError(ResourceError):
    """A computation could not certify that its answer is complete."""
