"""Exception types shared across the package."""

from __future__ import annotations


class GujhinError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GujhinError):
    """A data file (rule file, exceptions file, gold file) is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)


class DuplicateRuleError(ParseError):
    """Two rules in one file share a key that must be unique."""


class NotInvertibleError(GujhinError):
    """Reverse transliteration hit a codepoint with no source preimage."""


class MalformedTokenError(GujhinError):
    """A corpus token does not follow the word_TAG shape."""


class LengthMismatchError(GujhinError):
    """Gold records and system outputs are not aligned 1:1."""


class EmptyEvaluationError(GujhinError):
    """An evaluation was requested over zero words."""
