"""End-to-end discord-question pipeline: generate -> answer -> consolidate ->
qualify -> deduplicate.

Every stage is pure, so the pipeline is a pure function: identical inputs
(story, references, config, adapters) produce an identical question set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..corpus import SourceArticle, Story
from ..errors import SchemaError, StageFailure, TooFewSources
from ..textutils import content_word_set
from .answer import answer_question_baseline
from .consolidate import consolidate as consolidate_baseline
from .dedupe import deduplicate
from .generate import generate_questions_baseline
from .qualify import foreign_answer_rate, qualify
from .types import (
    AnswerGroup,
    AnswerSpan,
    CandidateQuestion,
    DiscordQuestion,
    DiscordQuestionSet,
    PipelineConfig,
    coverage_minimum,
)

GenerateStage = Callable[[SourceArticle], "list[CandidateQuestion]"]
AnswerStage = Callable[[CandidateQuestion, SourceArticle], "AnswerSpan | None"]
ConsolidateStage = Callable[["list[AnswerSpan]"], "list[AnswerGroup]"]


@dataclass(frozen=True)
class StageAdapters:
    """Optional substitutes for the three model stages.

    Each adapter receives and returns the same record types as the built-in
    lexical baselines, so a model-backed implementation can be swapped in
    without touching downstream code.
    """

    generate: GenerateStage | None = None
    answer: AnswerStage | None = None
    consolidate: ConsolidateStage | None = None


def run_pipeline(
    story: Story,
    reference_stories: list[Story],
    config: PipelineConfig | None = None,
    stage_adapters: StageAdapters | None = None,
) -> DiscordQuestionSet:
    """Produce the qualified, deduplicated discord questions for ``story``."""
    config = config or PipelineConfig()
    adapters = stage_adapters or StageAdapters()
    full = story.full_articles
    if len(full) < config.min_sources:
        raise TooFewSources(
            f"story {story.story_id!r} has {len(full)} full sources; "
            f"{config.min_sources} required"
        )

    # Stage 1: generation over all full articles, story order.
    generate = adapters.generate or generate_questions_baseline
    raw_candidates: list[CandidateQuestion] = []
    for article in full:
        produced = _checked(generate, "generate", article)
        for question in produced:
            if not isinstance(question, CandidateQuestion):
                raise StageFailure("generate", f"expected CandidateQuestion, got {type(question).__name__}")
            raw_candidates.append(question)

    # Identical question texts would produce identical answer sets and be
    # collapsed by dedup anyway; merging here (first occurrence wins) avoids
    # re-answering them.
    unique: list[CandidateQuestion] = []
    seen_texts: set[str] = set()
    for question in raw_candidates:
        if question.text not in seen_texts:
            seen_texts.add(question.text)
            unique.append(question)

    # Stage 2: answer every candidate against every full article.
    if adapters.answer is not None:
        answer_one: AnswerStage = adapters.answer
        caches = None
    else:
        caches = {a.source_domain: [content_word_set(p) for p in a.paragraphs] for a in full}

        def answer_one(question: CandidateQuestion, article: SourceArticle) -> AnswerSpan | None:
            return answer_question_baseline(
                question, article, config, _paragraph_cache=caches[article.source_domain]
            )

    if adapters.consolidate is not None:
        consolidate = adapters.consolidate
    else:
        def consolidate(spans: list[AnswerSpan]) -> list[AnswerGroup]:
            return consolidate_baseline(spans, config)

    reference_is_empty = not any(s.full_articles for s in reference_stories)

    answered = 0
    qualified: list[DiscordQuestion] = []
    rejected = {"coverage": 0, "diversity": 0, "specificity": 0}
    min_answering = coverage_minimum(config.coverage_fraction, len(full))
    for question in unique:
        spans: list[AnswerSpan] = []
        for article in full:
            span = _checked(answer_one, "answer", question, article)
            if span is None:
                continue
            _validate_span(span, article, stage="answer")
            spans.append(span)
        if not spans:
            continue
        answered += 1

        # Cheap pre-checks for criteria (a) and (b) so the reference corpus is
        # only scanned for candidates that could still qualify; a candidate
        # failing (a) or (b) reports that reason regardless of its rate.
        sources = {s.source_domain for s in spans}
        groups = list(_checked(consolidate, "consolidate", spans))
        _validate_groups(groups, spans)
        largest = max(len(g.members) for g in groups)
        passes_ab = (
            len(sources) >= min_answering
            and largest <= config.diversity_max_group_fraction * len(spans)
        )
        rate = foreign_answer_rate(question, reference_stories, config) if passes_ab else 0.0
        verdict = qualify(question, groups, len(full), rate, config)
        if verdict.accepted:
            qualified.append(DiscordQuestion(question=question, groups=tuple(groups)))
        else:
            rejected[verdict.reason] += 1

    final = deduplicate(qualified, config)
    stats = {
        "candidates": len(raw_candidates),
        "unique_candidates": len(unique),
        "answered": answered,
        "qualified": len(qualified),
        "deduplicated": len(final),
        "rejected": rejected,
        "empty_reference_warning": reference_is_empty,
    }
    return DiscordQuestionSet(story_id=story.story_id, questions=tuple(final), pipeline_stats=stats)


def _checked(stage: Callable, name: str, *args):
    try:
        return stage(*args)
    except (StageFailure, TooFewSources):
        raise
    except SchemaError as exc:
        raise StageFailure(name, str(exc)) from exc


def _validate_span(span: AnswerSpan, article: SourceArticle, stage: str) -> None:
    if span.source_domain != article.source_domain:
        raise StageFailure(stage, f"span source {span.source_domain!r} != {article.source_domain!r}")
    if not 0 <= span.paragraph_index < len(article.paragraphs):
        raise StageFailure(stage, f"paragraph index {span.paragraph_index} out of range")
    try:
        span.check_against(article.paragraphs[span.paragraph_index])
    except SchemaError as exc:
        raise StageFailure(stage, str(exc)) from exc


def _validate_groups(groups: list[AnswerGroup], spans: list[AnswerSpan]) -> None:
    members = [m for g in groups for m in g.members]
    if sorted(members, key=_span_key) != sorted(spans, key=_span_key):
        raise StageFailure("consolidate", "groups are not a partition of the input spans")
    ids = [g.group_id for g in groups]
    if len(set(ids)) != len(ids):
        raise StageFailure("consolidate", "duplicate group_id")


def _span_key(span: AnswerSpan) -> tuple:
    return (span.source_domain, span.paragraph_index, span.char_start, span.char_end)


__all__ = ["run_pipeline", "StageAdapters"]
