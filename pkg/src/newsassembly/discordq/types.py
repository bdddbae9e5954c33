"""Domain types for the discord-question pipeline."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import IoError, SchemaError


@dataclass(frozen=True)
class PipelineConfig:
    coverage_fraction: float = 0.30
    diversity_max_group_fraction: float = 0.50
    dedup_overlap_threshold: float = 0.80
    qa_overlap_threshold: float = 0.50
    consolidation_similarity_threshold: float = 0.40
    specificity_max_foreign_rate: float = 0.05
    min_sources: int = 10

    def __post_init__(self) -> None:
        for name in (
            "coverage_fraction",
            "diversity_max_group_fraction",
            "dedup_overlap_threshold",
            "qa_overlap_threshold",
            "consolidation_similarity_threshold",
            "specificity_max_foreign_rate",
        ):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise SchemaError(f"{name} must be in (0, 1], got {value}")
        if self.min_sources < 1:
            raise SchemaError(f"min_sources must be >= 1, got {self.min_sources}")

    @classmethod
    def from_file(cls, path: str | Path) -> PipelineConfig:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise IoError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise SchemaError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)


@dataclass(frozen=True)
class CandidateQuestion:
    question_id: str
    text: str
    origin_source: str | None = None
    origin_paragraph: int | None = None

    def __post_init__(self) -> None:
        if not self.text or not self.text.endswith("?"):
            raise SchemaError(f"question text must end with '?': {self.text!r}")


@dataclass(frozen=True)
class AnswerSpan:
    source_domain: str
    paragraph_index: int
    char_start: int
    char_end: int
    span_text: str

    def __post_init__(self) -> None:
        if not 0 <= self.char_start < self.char_end:
            raise SchemaError(
                f"bad span offsets [{self.char_start}, {self.char_end}) "
                f"for {self.source_domain!r}"
            )

    def check_against(self, paragraph: str) -> None:
        if self.char_end > len(paragraph):
            raise SchemaError(f"span end {self.char_end} beyond paragraph length {len(paragraph)}")
        if paragraph[self.char_start : self.char_end] != self.span_text:
            raise SchemaError("span_text does not match paragraph substring")


@dataclass(frozen=True)
class AnswerGroup:
    group_id: int
    members: tuple[AnswerSpan, ...]
    label: str

    def __post_init__(self) -> None:
        if not self.members:
            raise SchemaError("answer group has no members")


@dataclass(frozen=True)
class DiscordQuestion:
    question: CandidateQuestion
    groups: tuple[AnswerGroup, ...]

    @property
    def answering_sources(self) -> frozenset[str]:
        return frozenset(m.source_domain for g in self.groups for m in g.members)

    @property
    def total_answers(self) -> int:
        return sum(len(g.members) for g in self.groups)

    @property
    def answer_pairs(self) -> frozenset[tuple[str, int]]:
        """Distinct (source_domain, paragraph_index) answering pairs."""
        return frozenset(
            (m.source_domain, m.paragraph_index) for g in self.groups for m in g.members
        )


@dataclass(frozen=True)
class DiscordQuestionSet:
    story_id: str
    questions: tuple[DiscordQuestion, ...]
    pipeline_stats: dict = field(default_factory=dict)


def coverage_minimum(coverage_fraction: float, story_source_count: int) -> int:
    return math.ceil(coverage_fraction * story_source_count)


# ---------------------------------------------------------------------------
# Serialization (the DiscordQuestionSet file format and the stage-adapter
# record shapes share these dict forms).

def span_to_dict(span: AnswerSpan) -> dict:
    return {
        "source_domain": span.source_domain,
        "paragraph_index": span.paragraph_index,
        "char_start": span.char_start,
        "char_end": span.char_end,
        "span_text": span.span_text,
    }


def span_from_dict(raw: dict) -> AnswerSpan:
    try:
        return AnswerSpan(
            source_domain=raw["source_domain"],
            paragraph_index=int(raw["paragraph_index"]),
            char_start=int(raw["char_start"]),
            char_end=int(raw["char_end"]),
            span_text=raw["span_text"],
        )
    except KeyError as exc:
        raise SchemaError(f"span record missing field {exc.args[0]!r}") from exc


def group_to_dict(group: AnswerGroup) -> dict:
    return {
        "group_id": group.group_id,
        "label": group.label,
        "members": [span_to_dict(m) for m in group.members],
    }


def group_from_dict(raw: dict) -> AnswerGroup:
    try:
        return AnswerGroup(
            group_id=int(raw["group_id"]),
            members=tuple(span_from_dict(m) for m in raw["members"]),
            label=raw["label"],
        )
    except KeyError as exc:
        raise SchemaError(f"group record missing field {exc.args[0]!r}") from exc


def question_to_dict(question: CandidateQuestion) -> dict:
    return {"question_id": question.question_id, "text": question.text}


def question_from_dict(raw: dict) -> CandidateQuestion:
    try:
        return CandidateQuestion(
            question_id=raw["question_id"],
            text=raw["text"],
            origin_source=raw.get("origin_source"),
            origin_paragraph=raw.get("origin_paragraph"),
        )
    except KeyError as exc:
        raise SchemaError(f"question record missing field {exc.args[0]!r}") from exc


def dqset_to_dict(dqset: DiscordQuestionSet) -> dict:
    return {
        "story_id": dqset.story_id,
        "pipeline_stats": dqset.pipeline_stats,
        "questions": [
            {
                **question_to_dict(q.question),
                "groups": [group_to_dict(g) for g in q.groups],
            }
            for q in dqset.questions
        ],
    }


def dqset_from_dict(raw: dict) -> DiscordQuestionSet:
    try:
        questions = tuple(
            DiscordQuestion(
                question=question_from_dict(q),
                groups=tuple(group_from_dict(g) for g in q["groups"]),
            )
            for q in raw["questions"]
        )
        return DiscordQuestionSet(
            story_id=raw["story_id"],
            questions=questions,
            pipeline_stats=dict(raw.get("pipeline_stats", {})),
        )
    except KeyError as exc:
        raise SchemaError(f"question set record missing field {exc.args[0]!r}") from exc


def load_dqset(path: str | Path) -> DiscordQuestionSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return dqset_from_dict(raw)


def save_dqset(dqset: DiscordQuestionSet, path: str | Path) -> None:
    try:
        Path(path).write_text(
            json.dumps(dqset_to_dict(dqset), ensure_ascii=False, indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
