"""Extractive answering baseline (the QA stage): lexical overlap scoring."""

from __future__ import annotations

from ..corpus import SourceArticle
from ..textutils import content_word_set, jaccard, sentence_spans
from .types import AnswerSpan, CandidateQuestion, PipelineConfig


def _paragraph_sets(article: SourceArticle) -> list[frozenset[str]]:
    return [content_word_set(p) for p in article.paragraphs]


def answer_question_baseline(
    question: CandidateQuestion,
    article: SourceArticle,
    config: PipelineConfig,
    _paragraph_cache: list[frozenset[str]] | None = None,
) -> AnswerSpan | None:
    """Best-overlap answer span for ``question`` in ``article``, if any.

    Paragraphs are scored by Jaccard overlap between the question's content
    words and the paragraph's; below ``qa_overlap_threshold`` there is no
    answer. Within the winning paragraph the highest-overlap sentence becomes
    the span. Earlier paragraphs and sentences win ties.

    ``_paragraph_cache`` lets the pipeline reuse per-paragraph token sets
    across the many questions asked of one article.
    """
    if article.is_partial:
        return None
    question_words = content_word_set(question.text)
    if not question_words:
        return None

    paragraph_sets = _paragraph_cache if _paragraph_cache is not None else _paragraph_sets(article)
    best_index = -1
    best_score = 0.0
    for index, words in enumerate(paragraph_sets):
        score = jaccard(question_words, words)
        if score > best_score:
            best_score = score
            best_index = index
    if best_index < 0 or best_score < config.qa_overlap_threshold:
        return None

    paragraph = article.paragraphs[best_index]
    best_span: tuple[int, int] | None = None
    best_sentence_score = -1.0
    for start, end in sentence_spans(paragraph):
        score = jaccard(question_words, content_word_set(paragraph[start:end]))
        if score > best_sentence_score:
            best_sentence_score = score
            best_span = (start, end)
    if best_span is None:
        return None
    start, end = best_span
    return AnswerSpan(
        source_domain=article.source_domain,
        paragraph_index=best_index,
        char_start=start,
        char_end=end,
        span_text=paragraph[start:end],
    )


__all__ = ["answer_question_baseline"]
