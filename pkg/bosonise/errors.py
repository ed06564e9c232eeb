"""Structured error hierarchy for bosonise.

All bosonise errors inherit from BosonisationError, so callers can catch
everything the library raises in one place while still telling a parse
failure from a resource refusal.
"""


class BosonisationError(Exception):
    """Base exception for all bosonise errors."""

    def __init__(self, message: str, *, hint: str | None = None):
        super().__init__(message)
        self.hint = hint


class ParseError(BosonisationError):
    """Malformed polynomial or spherical text."""

    def __init__(self, message: str, *, position: int, hint: str | None = None):
        super().__init__(f"{message} (at position {position})", hint=hint)
        self.position = position


class DimensionError(BosonisationError):
    """Operation called outside its (particles, dims) domain."""


class ZeroPolynomialError(BosonisationError):
    """The zero polynomial has no canonical representative."""


class IncompleteBasisError(BosonisationError):
    """Fewer shapes found than the module rank N!^(d-1)."""

    def __init__(self, message: str, *, found: int, expected: int, hint: str | None = None):
        super().__init__(message, hint=hint)
        self.found = found
        self.expected = expected


class DecompositionError(BosonisationError):
    """The free-module linear system is inconsistent or degenerate."""


class ClassificationError(BosonisationError):
    """Relative-motion classification preconditions violated."""


class HolomorphyError(BosonisationError):
    """The holomorphic part of the shape span is not one-dimensional."""

    def __init__(self, message: str, *, dimension: int, hint: str | None = None):
        super().__init__(message, hint=hint)
        self.dimension = dimension


class ResourceCapError(BosonisationError):
    """A shell basis is larger than the configured cap."""

    def __init__(self, message: str, *, size: int, cap: int, hint: str | None = None):
        super().__init__(message, hint=hint)
        self.size = size
        self.cap = cap


class GoldenMismatchError(BosonisationError):
    """A report differs from its golden file."""

    def __init__(self, message: str, *, changes: dict, hint: str | None = None):
        super().__init__(message, hint=hint)
        self.changes = changes
