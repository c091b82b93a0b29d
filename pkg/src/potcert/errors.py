"""Exception types shared across the package."""


class ResourceLimitError(ValueError):
    """Requested size exceeds a configured cap."""


class NotFormalizableError(ValueError):
    """A rank-2 decomposition has an index where both vectors vanish."""


class VerificationError(AssertionError):
    """An exact cross-check between two independent computations failed."""
