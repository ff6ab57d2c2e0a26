"""Exception hierarchy.

Every error carries a machine-readable ``kind`` string; the HTTP service
serializes errors as ``{"kind": ..., "message": ...}`` and the CLI maps
them to exit code 1.
"""


class RainTankError(Exception):
    """Base class for all package errors."""

    kind = "error"


class InvalidInputError(RainTankError, ValueError):
    """A value violates a documented precondition or invariant."""

    kind = "invalid-input"


class NoDemandError(InvalidInputError):
    """An operation that needs demand days was given an all-zero schedule."""

    kind = "no-demand"


class InsufficientHistoryError(RainTankError):
    """The rainfall record cannot supply a single complete replay window."""

    kind = "insufficient-history"


class CsvFormatError(InvalidInputError):
    """Structurally broken CSV (bad header, wrong field count, bad value)."""

    kind = "malformed-row"

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class GapError(InvalidInputError):
    """Missing days inside a rainfall record."""

    kind = "gap"

    def __init__(self, message: str, missing_start=None, missing_end=None):
        super().__init__(message)
        self.missing_start = missing_start
        self.missing_end = missing_end


class DuplicateDateError(InvalidInputError):
    """The same date appears twice (rainfall row or observation record)."""

    kind = "duplicate-date"


class NegativeRainfallError(InvalidInputError):
    """A rainfall depth below zero."""

    kind = "negative-rainfall"


class FetchError(RainTankError):
    """Transport-level failure talking to the rainfall provider."""

    kind = "http-failure"


class AuthError(FetchError):
    """The provider rejected the API key."""

    kind = "auth-failure"


class IncompleteRangeError(FetchError):
    """The provider answered but did not cover the requested date range."""

    kind = "incomplete-range"


class SchemaMismatchError(FetchError):
    """The provider payload does not have the expected shape."""

    kind = "schema-mismatch"


class UnknownSystemError(RainTankError):
    """A request named a system other than the one this instance serves."""

    kind = "unknown-system"


class DataUnavailableError(RainTankError):
    """The service could not load its rainfall/config data."""

    kind = "data-unavailable"
