"""Shared exception types."""


class ResourceCapError(RuntimeError):
    """An enumeration or iteration exceeded its configured cap.

    Raised instead of silently truncating, so callers can distinguish
    "genuinely too large" from a wrong answer.
    """
