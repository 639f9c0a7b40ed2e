"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters outside the valid range for a 4-regular circulant C_n(1, s)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two independently computed quantities that must agree do not,
    e.g. brute-force loads versus class counts, or a colouring conflict.
    """
