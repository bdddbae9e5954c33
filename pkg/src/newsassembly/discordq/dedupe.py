"""Question deduplication on answering-paragraph overlap."""

from __future__ import annotations

from .types import DiscordQuestion, PipelineConfig


def pair_overlap(a: frozenset[tuple[str, int]], b: frozenset[tuple[str, int]]) -> float:
    """|A∩B| / min(|A|,|B|) over (source, paragraph) answer pairs."""
    if not a or not b:
        return 0.0
    return len(a & b) / min(len(a), len(b))


def deduplicate(
    questions: list[DiscordQuestion], config: PipelineConfig
) -> list[DiscordQuestion]:
    """Drop questions whose answering paragraphs overlap a kept question.

    Questions are processed in descending total-answer order (ties by
    ascending question text); a question survives only if its overlap with
    every already-kept question stays at or below the threshold. Strictly
    greater overlap is required to drop, so exactly-at-threshold pairs both
    survive.
    """
    ordered = sorted(questions, key=lambda q: (-q.total_answers, q.question.text))
    kept: list[DiscordQuestion] = []
    kept_pairs: list[frozenset[tuple[str, int]]] = []
    for question in ordered:
        pairs = question.answer_pairs
        if all(pair_overlap(pairs, other) <= config.dedup_overlap_threshold for other in kept_pairs):
            kept.append(question)
            kept_pairs.append(pairs)
    return kept


__all__ = ["deduplicate", "pair_overlap"]
