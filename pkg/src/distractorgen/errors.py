"""Exception types shared across the package."""

from __future__ import annotations


class DistractorError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DistractorError):
    """A document or resource file is malformed."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)
        self.line = line
        self.field = field


class ValidationError(DistractorError):
    """Parsed data violates a type invariant."""


class NoTargetError(DistractorError):
    """The answer contains no substitutable token."""


class OutOfVocabularyError(DistractorError):
    """A word was not found in the vector table."""


class PerturbError(DistractorError):
    """A perturbation draw has an empty feasible set or left the value domain."""


class RenderError(DistractorError):
    """A numeric value cannot be rendered in its surface format."""


class ConfigError(DistractorError):
    """A configuration value is invalid; carries the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class InsufficientCandidatesError(DistractorError):
    """Fewer distinct candidates exist than were requested.

    ``found`` carries whatever was obtained before the shortfall, so callers
    that tolerate partial results can use them without regenerating.
    """

    def __init__(self, message: str, found: list[str] | None = None):
        super().__init__(message)
        self.found = list(found or [])
