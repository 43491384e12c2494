"""Exception hierarchy.

Two families matter to callers: `SpecError` (the input document or command
line is malformed) and `DomainError` (the input is well formed but the
requested geometric operation cannot be carried out).
"""


class LazyvorError(Exception):
    """Base class for every error raised by this package."""


class SpecError(LazyvorError):
    """A source specification or CLI argument failed validation."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class GrowthBoundError(SpecError):
    """A family point violates the growth bound its spec declares."""


class DomainError(LazyvorError, ValueError):
    """Well-formed input on which the operation is undefined."""


class GeometryError(DomainError):
    """A geometric precondition does not hold (e.g. 0 not interior)."""


class NotAMemberError(DomainError):
    """The queried point does not belong to the point source."""


class HintError(DomainError):
    """A direction-cone hint is contradicted by the point source."""


class CandidateLimitError(DomainError):
    """A candidate enumeration exceeded the configured limit."""


class RenderError(DomainError):
    """The scene cannot be rendered (only planar scenes are supported)."""
