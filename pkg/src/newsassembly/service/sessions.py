"""Exercise sessions: assignment, submission, and response export."""

from __future__ import annotations

import random
import secrets
import uuid
from datetime import datetime, timezone

from ..assembly import ALL_KINDS, visible_word_count
from ..errors import AlreadySubmitted, NotFound, SchemaError, SessionClosed, ViewsIncomplete
from .store import Store

EXERCISE_KINDS = ("article", "headlines", "annotated")
ANSWERS_PER_EXERCISE = 4
NO_ANSWER_TEXT = "no answer"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def start_exercise(
    store: Store,
    participant_id: str,
    story_choices: list[str],
    seed: int | None = None,
) -> dict:
    """Create a session pairing the three interface kinds with three stories.

    The kinds are shuffled uniformly under a per-session seed and paired with
    the chosen stories in choice order, so each participant meets every kind
    exactly once. Every chosen story must exist with all five views built.
    """
    if len(story_choices) != len(EXERCISE_KINDS):
        raise SchemaError(f"expected {len(EXERCISE_KINDS)} story choices")
    if len(set(story_choices)) != len(story_choices):
        raise SchemaError("story choices must be distinct")
    for story_id in story_choices:
        record = store.get_story_record(story_id)  # raises NotFound
        missing = [k for k in ALL_KINDS if k not in record.views]
        if missing:
            raise ViewsIncomplete(f"story {story_id!r} lacks views {missing}")

    if seed is None:
        seed = secrets.randbits(32)
    order = list(EXERCISE_KINDS)
    random.Random(seed).shuffle(order)

    session = {
        "session_id": uuid.uuid4().hex,
        "participant_id": participant_id,
        "seed": seed,
        "status": "open",
        "created_at": _now(),
        "tab_switches": 0,
        "assignments": [
            {
                "story_id": story_id,
                "interface_kind": kind,
                "started_at": _now() if index == 0 else None,
                "submitted": False,
                "answers": None,
                "links_opened": 0,
                "tab_switches": 0,
                "duration_seconds": 0.0,
            }
            for index, (story_id, kind) in enumerate(zip(story_choices, order))
        ],
    }
    store.put_session(session)
    return session


def submit_exercise(
    store: Store,
    session_id: str,
    assignment_index: int,
    answers: list[str],
    links_opened: int = 0,
    tab_switches: int = 0,
    duration_seconds: float = 0.0,
) -> dict:
    """Persist one assignment's answers verbatim and advance the session."""
    if len(answers) != ANSWERS_PER_EXERCISE:
        raise SchemaError(f"expected {ANSWERS_PER_EXERCISE} answers, got {len(answers)}")
    with store.session_lock(session_id):
        session = store.get_session(session_id)
        if session["status"] != "open":
            raise SessionClosed(f"session {session_id!r} is closed")
        if not 0 <= assignment_index < len(session["assignments"]):
            raise NotFound(f"assignment {assignment_index} of session {session_id!r}")
        assignment = session["assignments"][assignment_index]
        if assignment["submitted"]:
            raise AlreadySubmitted(
                f"assignment {assignment_index} of session {session_id!r}"
            )
        assignment.update(
            submitted=True,
            answers=list(answers),
            links_opened=int(links_opened),
            tab_switches=int(tab_switches),
            duration_seconds=float(duration_seconds),
        )
        session["tab_switches"] = sum(a["tab_switches"] for a in session["assignments"])
        if assignment_index + 1 < len(session["assignments"]):
            following = session["assignments"][assignment_index + 1]
            if following["started_at"] is None:
                following["started_at"] = _now()
        if all(a["submitted"] for a in session["assignments"]):
            session["status"] = "submitted"
        store.put_session(session)
        return session


def is_blank_answer(text: str) -> bool:
    return not text.strip() or text.strip().lower() == NO_ANSWER_TEXT


def export_responses(store: Store) -> list[dict]:
    """Submitted answers in the evaluation input format (aspects unlabeled)."""
    rows: list[dict] = []
    for session in store.list_sessions():
        for assignment in session["assignments"]:
            if not assignment["submitted"]:
                continue
            kind = assignment["interface_kind"]
            try:
                payload = store.get_view(assignment["story_id"], kind)
                words = visible_word_count(kind, payload)
            except NotFound:
                words = 0
            for question_index, answer in enumerate(assignment["answers"]):
                rows.append(
                    {
                        "participant_id": session["participant_id"],
                        "story_id": assignment["story_id"],
                        "interface_kind": kind,
                        "question_index": question_index,
                        "answer_text": answer,
                        "is_blank": is_blank_answer(answer),
                        "aspect_ids": [],
                        "links_opened": assignment["links_opened"],
                        "words_shown": words,
                        "duration_seconds": assignment["duration_seconds"],
                        "prediction_category": None,
                    }
                )
    return rows
