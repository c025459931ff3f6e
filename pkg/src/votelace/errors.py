"""Shared exception types."""


class ParseError(ValueError):
    """Raised when election or pattern text input is malformed."""


class GuardExceeded(RuntimeError):
    """Raised when an exhaustive operation would exceed its configured size cap."""
