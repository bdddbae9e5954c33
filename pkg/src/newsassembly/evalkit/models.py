"""Study data records and their file formats.

Responses load from JSON (an array of objects, or {"responses": [...]}) or
from CSV with the same column names; ``aspect_ids`` in CSV is a
space-separated list. Aspect catalogs live one file per story:

    { "story_id", "questions": [ { "question_index",
                                   "aspects": [ {"aspect_id", "description"} ] } ] }
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import IoError, SchemaError

PREDICTION_CATEGORIES = ("one_sided", "hypothetical", "two_sided")


@dataclass(frozen=True)
class ExerciseResponse:
    participant_id: str
    story_id: str
    interface_kind: str
    question_index: int
    answer_text: str
    is_blank: bool
    aspect_ids: frozenset[int]
    links_opened: int
    words_shown: int
    duration_seconds: float
    prediction_category: str | None = None

    def __post_init__(self) -> None:
        if self.is_blank and self.aspect_ids:
            raise SchemaError(
                f"blank answer of {self.participant_id!r} carries aspect labels"
            )
        if self.prediction_category is not None and self.prediction_category not in PREDICTION_CATEGORIES:
            raise SchemaError(f"unknown prediction category {self.prediction_category!r}")


def response_to_dict(response: ExerciseResponse) -> dict:
    return {
        "participant_id": response.participant_id,
        "story_id": response.story_id,
        "interface_kind": response.interface_kind,
        "question_index": response.question_index,
        "answer_text": response.answer_text,
        "is_blank": response.is_blank,
        "aspect_ids": sorted(response.aspect_ids),
        "links_opened": response.links_opened,
        "words_shown": response.words_shown,
        "duration_seconds": response.duration_seconds,
        "prediction_category": response.prediction_category,
    }


def response_from_dict(raw: dict) -> ExerciseResponse:
    try:
        return ExerciseResponse(
            participant_id=str(raw["participant_id"]),
            story_id=str(raw["story_id"]),
            interface_kind=str(raw["interface_kind"]),
            question_index=int(raw["question_index"]),
            answer_text=str(raw["answer_text"]),
            is_blank=bool(raw["is_blank"]),
            aspect_ids=frozenset(int(a) for a in raw.get("aspect_ids", [])),
            links_opened=int(raw.get("links_opened", 0)),
            words_shown=int(raw.get("words_shown", 0)),
            duration_seconds=float(raw.get("duration_seconds", 0)),
            prediction_category=raw.get("prediction_category") or None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad response record: {exc}") from exc


def _row_from_csv(row: dict) -> ExerciseResponse:
    raw = dict(row)
    raw["aspect_ids"] = [int(a) for a in (row.get("aspect_ids") or "").split() if a]
    raw["is_blank"] = str(row.get("is_blank", "")).strip().lower() in ("1", "true", "yes")
    return response_from_dict(raw)


def load_responses(path: str | Path) -> list[ExerciseResponse]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".csv":
        reader = csv.DictReader(text.splitlines())
        return [_row_from_csv(row) for row in reader]
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    records = raw.get("responses") if isinstance(raw, dict) else raw
    if not isinstance(records, list):
        raise SchemaError(f"{path}: expected a list of response records")
    return [response_from_dict(r) for r in records]


def save_responses(responses: list[ExerciseResponse], path: str | Path) -> None:
    Path(path).write_text(
        json.dumps([response_to_dict(r) for r in responses], ensure_ascii=False, indent=2, sort_keys=True)
        + "\n",
        encoding="utf-8",
    )


def load_aspect_catalogs(directory: str | Path) -> dict[tuple[str, int], dict[int, str]]:
    """(story_id, question_index) -> {aspect_id: description} over a directory."""
    catalogs: dict[tuple[str, int], dict[int, str]] = {}
    for path in sorted(Path(directory).glob("*.json")):
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"{path}: {exc}") from exc
        try:
            story_id = raw["story_id"]
            for question in raw["questions"]:
                key = (story_id, int(question["question_index"]))
                catalogs[key] = {
                    int(a["aspect_id"]): a["description"] for a in question["aspects"]
                }
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"{path}: bad aspect catalog: {exc}") from exc
    return catalogs


def validate_against_catalogs(
    responses: list[ExerciseResponse],
    catalogs: dict[tuple[str, int], dict[int, str]],
) -> None:
    for response in responses:
        known = catalogs.get((response.story_id, response.question_index))
        if known is None:
            continue
        stray = response.aspect_ids - set(known)
        if stray:
            raise SchemaError(
                f"response of {response.participant_id!r} on "
                f"({response.story_id}, q{response.question_index}) uses "
                f"unknown aspects {sorted(stray)}"
            )
