"""Persistence and HTTP serving for processed stories and exercise sessions."""

from .app import create_app
from .sessions import (
    EXERCISE_KINDS,
    export_responses,
    is_blank_answer,
    start_exercise,
    submit_exercise,
)
from .store import DATA_DIR_ENV, ProcessedStoryRecord, Store, build_story_record

__all__ = [
    "DATA_DIR_ENV",
    "EXERCISE_KINDS",
    "ProcessedStoryRecord",
    "Store",
    "build_story_record",
    "create_app",
    "export_responses",
    "is_blank_answer",
    "start_exercise",
    "submit_exercise",
]
