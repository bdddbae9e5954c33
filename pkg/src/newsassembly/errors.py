"""Domain error hierarchy shared by all modules.

The CLI prints the class name of any raised NewsAssemblyError verbatim to
stderr, so class names are part of the external contract.
"""

from __future__ import annotations


class NewsAssemblyError(Exception):
    """Base class for all domain errors."""


class MalformedDocument(NewsAssemblyError):
    """Raised when no headline can be recovered from a raw document."""


class SchemaError(NewsAssemblyError):
    """A corpus or payload file violates its schema or a type invariant."""


class IoError(NewsAssemblyError):
    """A file could not be read or written."""


class NoFullArticle(NewsAssemblyError):
    """Every article in the story is metadata-only (partial)."""


class TooFewSources(NewsAssemblyError):
    """The story has fewer non-partial sources than the configured minimum."""


class StageFailure(NewsAssemblyError):
    """A pipeline stage adapter returned malformed output."""

    def __init__(self, stage: str, detail: str) -> None:
        super().__init__(f"stage {stage!r}: {detail}")
        self.stage = stage
        self.detail = detail


class EmptyQuestionSet(NewsAssemblyError):
    """A view builder requiring questions received an empty question set."""


class EmptyGroup(NewsAssemblyError):
    """Metric aggregation received an empty response group."""


class EmptyInput(NewsAssemblyError):
    """An operation requiring a non-empty list received an empty one."""


class InsufficientData(NewsAssemblyError):
    """A statistical test needs more observations than were supplied."""


class SizeTooLarge(NewsAssemblyError):
    """A requested resample size exceeds the participant pool."""


class NotFound(NewsAssemblyError):
    """A requested record does not exist in the store."""


class ViewsIncomplete(NewsAssemblyError):
    """A story is missing built views required to start an exercise."""


class AlreadySubmitted(NewsAssemblyError):
    """The exercise assignment was already submitted."""


class SessionClosed(NewsAssemblyError):
    """The exercise session has no open assignments left."""
