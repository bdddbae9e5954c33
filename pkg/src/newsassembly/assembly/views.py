"""View types for the five reading interfaces and their JSON payload forms.

Payloads deliberately exclude the interface kind so that a zero-annotation
annotated view and the plain article view are structurally identical dicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ANNOTATED = "annotated"
RECOMPOSED = "recomposed"
GRID = "grid"
HEADLINES = "headlines"
ARTICLE = "article"
ALL_KINDS = (ANNOTATED, RECOMPOSED, GRID, HEADLINES, ARTICLE)

PALETTE_SIZE = 8


@dataclass(frozen=True)
class AnnotationAnswer:
    source_domain: str
    span_text: str
    url: str


@dataclass(frozen=True)
class Annotation:
    question_id: str
    question_text: str
    anchor_paragraph: int
    answers: tuple[AnnotationAnswer, ...]
    collapsed_default: bool = True


@dataclass(frozen=True)
class ArticleView:
    """Shared shape of the Annotated Article and the plain News Article."""

    basis_source: str
    headline: str
    byline: str
    blocks: tuple[dict, ...]


@dataclass(frozen=True)
class UnitAnswer:
    source_domain: str
    paragraph_text: str
    bold_char_range: tuple[int, int]
    url: str


@dataclass(frozen=True)
class QuestionUnit:
    question_text: str
    primary_answers: tuple[UnitAnswer, ...]
    carousel_answers: tuple[UnitAnswer, ...]


@dataclass(frozen=True)
class RecomposedArticleView:
    story_title: str
    byline_sources: tuple[str, ...]
    intro_summary: str
    units: tuple[QuestionUnit, ...]


@dataclass(frozen=True)
class GridCell:
    group_id: int
    style_index: int
    span_text: str
    url: str


@dataclass(frozen=True)
class QuestionGridView:
    row_questions: tuple[tuple[str, int], ...]
    col_sources: tuple[tuple[str, int], ...]
    cells: dict[tuple[int, int], GridCell] = field(hash=False)


@dataclass(frozen=True)
class HeadlineEntry:
    source_domain: str
    headline: str
    url: str


@dataclass(frozen=True)
class HeadlineListView:
    entries: tuple[HeadlineEntry, ...]


def paragraph_block(text: str) -> dict:
    return {"type": "paragraph", "text": text}


def annotation_block(annotation: Annotation) -> dict:
    return {
        "type": "annotation",
        "question_id": annotation.question_id,
        "question_text": annotation.question_text,
        "anchor_paragraph": annotation.anchor_paragraph,
        "answers": [
            {"source_domain": a.source_domain, "span_text": a.span_text, "url": a.url}
            for a in annotation.answers
        ],
        "collapsed_default": annotation.collapsed_default,
    }


def article_view_payload(view: ArticleView) -> dict:
    return {
        "basis_source": view.basis_source,
        "headline": view.headline,
        "byline": view.byline,
        "blocks": list(view.blocks),
    }


def recomposed_payload(view: RecomposedArticleView) -> dict:
    def answer(a: UnitAnswer) -> dict:
        return {
            "source_domain": a.source_domain,
            "paragraph_text": a.paragraph_text,
            "bold_char_range": list(a.bold_char_range),
            "url": a.url,
        }

    return {
        "story_title": view.story_title,
        "byline_sources": list(view.byline_sources),
        "intro_summary": view.intro_summary,
        "units": [
            {
                "question_text": u.question_text,
                "primary_answers": [answer(a) for a in u.primary_answers],
                "carousel_answers": [answer(a) for a in u.carousel_answers],
            }
            for u in view.units
        ],
    }


def grid_payload(view: QuestionGridView) -> dict:
    return {
        "row_questions": [
            {"question_text": text, "answer_count": count} for text, count in view.row_questions
        ],
        "col_sources": [
            {"source_domain": domain, "questions_answered": count}
            for domain, count in view.col_sources
        ],
        "cells": [
            {
                "row": row,
                "col": col,
                "group_id": cell.group_id,
                "style_index": cell.style_index,
                "span_text": cell.span_text,
                "url": cell.url,
            }
            for (row, col), cell in sorted(view.cells.items())
        ],
    }


def headlines_payload(view: HeadlineListView) -> dict:
    return {
        "entries": [
            {"source_domain": e.source_domain, "headline": e.headline, "url": e.url}
            for e in view.entries
        ]
    }
