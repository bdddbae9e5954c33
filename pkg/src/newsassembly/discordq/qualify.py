"""Qualification filters: coverage (a), diversity (b), specificity (c)."""

from __future__ import annotations

from dataclasses import dataclass

from ..corpus import Story
from ..errors import TooFewSources
from .answer import answer_question_baseline
from .types import AnswerGroup, CandidateQuestion, PipelineConfig, coverage_minimum

REASON_COVERAGE = "coverage"
REASON_DIVERSITY = "diversity"
REASON_SPECIFICITY = "specificity"


@dataclass(frozen=True)
class QualificationVerdict:
    accepted: bool
    reason: str | None = None


def qualify(
    question: CandidateQuestion,
    groups: list[AnswerGroup],
    story_source_count: int,
    foreign_answer_rate: float,
    config: PipelineConfig,
) -> QualificationVerdict:
    """Accept or reject one candidate, reporting the first failed criterion.

    Criteria are checked in order: (a) enough distinct answering sources,
    (b) no group holding more than the configured fraction of all answers,
    (c) foreign answer rate at or below the specificity ceiling.
    """
    if story_source_count < config.min_sources:
        raise TooFewSources(
            f"{story_source_count} sources < required {config.min_sources}"
        )
    sources = {m.source_domain for g in groups for m in g.members}
    total = sum(len(g.members) for g in groups)
    if len(sources) < coverage_minimum(config.coverage_fraction, story_source_count):
        return QualificationVerdict(False, REASON_COVERAGE)
    largest = max((len(g.members) for g in groups), default=0)
    if total == 0 or largest > config.diversity_max_group_fraction * total:
        return QualificationVerdict(False, REASON_DIVERSITY)
    if foreign_answer_rate > config.specificity_max_foreign_rate:
        return QualificationVerdict(False, REASON_SPECIFICITY)
    return QualificationVerdict(True)


def foreign_answer_rate(
    question: CandidateQuestion,
    reference_stories: list[Story],
    config: PipelineConfig,
) -> float:
    """Fraction of non-partial reference articles that answer ``question``.

    An empty reference set scores 0.0; the pipeline records a warning flag in
    its stats for that case.
    """
    articles = [a for story in reference_stories for a in story.full_articles]
    if not articles:
        return 0.0
    answered = sum(
        1 for article in articles if answer_question_baseline(question, article, config) is not None
    )
    return answered / len(articles)


__all__ = [
    "QualificationVerdict",
    "qualify",
    "foreign_answer_rate",
    "REASON_COVERAGE",
    "REASON_DIVERSITY",
    "REASON_SPECIFICITY",
]
