"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class VerificationError(RuntimeError):
    """A numerical identity or bound failed; ``report`` carries diagnostics."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ResourceError(RuntimeError):
    """A configured size cap was exceeded."""
