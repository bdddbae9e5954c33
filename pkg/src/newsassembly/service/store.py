"""File-backed store with atomic replace semantics.

Layout under the data root (ASSEMBLY_DATA_DIR or an explicit path):

    stories/{story_id}.json     processed story records
    sessions/{session_id}.json  exercise sessions
    questions/{story_id}.json   comprehension questions (authored config)
    audit.log                   append-only conflict/overwrite log

Writes go through a temp file in the target directory followed by
``os.replace``, so concurrent readers never observe a partial record.
Concurrent puts on one key are serialized by a per-key lock; a put over an
existing record wins (last writer) and leaves an audit entry.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from ..assembly import ALL_KINDS, build_all_views
from ..corpus import Story, story_to_dict
from ..discordq import DiscordQuestionSet, dqset_to_dict
from ..errors import NotFound, SchemaError

DATA_DIR_ENV = "ASSEMBLY_DATA_DIR"


@dataclass(frozen=True)
class ProcessedStoryRecord:
    story_id: str
    story: dict
    dqset: dict
    views: dict[str, dict]
    view_errors: dict[str, str]
    processed_at: str

    def __post_init__(self) -> None:
        missing = [k for k in ALL_KINDS if k not in self.views and k not in self.view_errors]
        if missing:
            raise SchemaError(f"record {self.story_id!r} lacks views or errors for {missing}")

    def to_dict(self) -> dict:
        return {
            "story_id": self.story_id,
            "story": self.story,
            "dqset": self.dqset,
            "views": self.views,
            "view_errors": self.view_errors,
            "processed_at": self.processed_at,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "ProcessedStoryRecord":
        try:
            return cls(
                story_id=raw["story_id"],
                story=raw["story"],
                dqset=raw["dqset"],
                views=raw["views"],
                view_errors=raw.get("view_errors", {}),
                processed_at=raw["processed_at"],
            )
        except KeyError as exc:
            raise SchemaError(f"story record missing field {exc.args[0]!r}") from exc


def build_story_record(
    story: Story, dqset: DiscordQuestionSet, processed_at: datetime | None = None
) -> ProcessedStoryRecord:
    views, errors = build_all_views(story, dqset)
    stamp = (processed_at or datetime.now(timezone.utc)).isoformat()
    return ProcessedStoryRecord(
        story_id=story.story_id,
        story=story_to_dict(story),
        dqset=dqset_to_dict(dqset),
        views=views,
        view_errors=errors,
        processed_at=stamp,
    )


class Store:
    def __init__(self, root: str | Path | None = None) -> None:
        root = root or os.environ.get(DATA_DIR_ENV)
        if root is None:
            raise SchemaError(f"no data directory: pass one or set {DATA_DIR_ENV}")
        self.root = Path(root)
        for sub in ("stories", "sessions", "questions"):
            (self.root / sub).mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.RLock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, key: str) -> threading.RLock:
        # Reentrant: submit flows hold the session lock across a put.
        with self._locks_guard:
            return self._locks.setdefault(key, threading.RLock())

    def _write_atomic(self, path: Path, payload: dict) -> None:
        data = json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(data)
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

    def _read(self, path: Path) -> dict:
        if not path.exists():
            raise NotFound(str(path.stem))
        return json.loads(path.read_text(encoding="utf-8"))

    def _audit(self, line: str) -> None:
        stamp = datetime.now(timezone.utc).isoformat()
        with self._lock("audit.log"):
            with open(self.root / "audit.log", "a", encoding="utf-8") as handle:
                handle.write(f"{stamp} {line}\n")

    # -- stories ------------------------------------------------------------

    def put_story(self, record: ProcessedStoryRecord) -> None:
        path = self.root / "stories" / f"{record.story_id}.json"
        with self._lock(f"story:{record.story_id}"):
            if path.exists():
                self._audit(f"conflicting_write story_id={record.story_id} (last writer wins)")
            self._write_atomic(path, record.to_dict())

    def get_story_record(self, story_id: str) -> ProcessedStoryRecord:
        try:
            raw = self._read(self.root / "stories" / f"{story_id}.json")
        except NotFound:
            raise NotFound(f"story {story_id!r}") from None
        return ProcessedStoryRecord.from_dict(raw)

    def list_stories(self) -> list[dict]:
        """Summaries sorted by processed_at descending."""
        summaries = []
        for path in (self.root / "stories").glob("*.json"):
            record = ProcessedStoryRecord.from_dict(self._read(path))
            summaries.append(
                {
                    "story_id": record.story_id,
                    "title": record.story.get("title", ""),
                    "processed_at": record.processed_at,
                    "source_count": len(record.story.get("articles", [])),
                    "question_count": len(record.dqset.get("questions", [])),
                }
            )
        summaries.sort(key=lambda s: (s["processed_at"], s["story_id"]), reverse=True)
        return summaries

    def get_view(self, story_id: str, kind: str) -> dict:
        record = self.get_story_record(story_id)
        if kind not in ALL_KINDS:
            raise NotFound(f"view kind {kind!r}")
        if kind in record.view_errors:
            raise NotFound(f"view {kind!r} of {story_id!r} failed to build: {record.view_errors[kind]}")
        if kind not in record.views:
            raise NotFound(f"view {kind!r} of {story_id!r}")
        return record.views[kind]

    # -- sessions -----------------------------------------------------------

    def put_session(self, session: dict) -> None:
        session_id = session["session_id"]
        path = self.root / "sessions" / f"{session_id}.json"
        with self._lock(f"session:{session_id}"):
            self._write_atomic(path, session)

    def get_session(self, session_id: str) -> dict:
        try:
            return self._read(self.root / "sessions" / f"{session_id}.json")
        except NotFound:
            raise NotFound(f"session {session_id!r}") from None

    def session_lock(self, session_id: str) -> threading.RLock:
        return self._lock(f"session:{session_id}")

    def list_sessions(self) -> list[dict]:
        sessions = [self._read(p) for p in sorted((self.root / "sessions").glob("*.json"))]
        return sessions

    # -- comprehension questions ---------------------------------------------

    def put_questions(self, story_id: str, questions: list[str]) -> None:
        if len(questions) != 4:
            raise SchemaError(f"expected 4 comprehension questions, got {len(questions)}")
        path = self.root / "questions" / f"{story_id}.json"
        with self._lock(f"questions:{story_id}"):
            self._write_atomic(path, {"story_id": story_id, "questions": questions})

    def get_questions(self, story_id: str) -> list[str]:
        try:
            raw = self._read(self.root / "questions" / f"{story_id}.json")
        except NotFound:
            raise NotFound(f"questions for story {story_id!r}") from None
        questions = raw.get("questions")
        if not isinstance(questions, list) or len(questions) != 4:
            raise SchemaError(f"questions file for {story_id!r} must hold 4 questions")
        return questions
