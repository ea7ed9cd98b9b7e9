"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised when graph input text is malformed.

    ``position`` is the 0-based byte offset (graph6) or 1-based line
    number (edge list) of the offending input.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class HypothesisViolation(ValueError):
    """Raised when a graph fails the preconditions of a certificate.

    ``failures`` lists every violated hypothesis, e.g. ``["odd order"]``.
    """

    def __init__(self, failures: list[str]):
        super().__init__("; ".join(failures))
        self.failures = list(failures)
