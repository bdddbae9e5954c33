"""Interface view assembly for processed stories."""

from .build import (
    annotation_count,
    build_all_views,
    build_annotated,
    build_grid,
    build_headline_list,
    build_news_article,
    build_view_payload,
    compose_recomposed,
    select_basis,
    select_question_sequence,
    select_summary,
    visible_word_count,
)
from .htmlrender import render_html
from .views import (
    ALL_KINDS,
    ANNOTATED,
    ARTICLE,
    GRID,
    HEADLINES,
    PALETTE_SIZE,
    RECOMPOSED,
    Annotation,
    AnnotationAnswer,
    ArticleView,
    GridCell,
    HeadlineEntry,
    HeadlineListView,
    QuestionGridView,
    QuestionUnit,
    RecomposedArticleView,
    UnitAnswer,
)

__all__ = [
    "ALL_KINDS",
    "ANNOTATED",
    "ARTICLE",
    "GRID",
    "HEADLINES",
    "PALETTE_SIZE",
    "RECOMPOSED",
    "Annotation",
    "AnnotationAnswer",
    "ArticleView",
    "GridCell",
    "HeadlineEntry",
    "HeadlineListView",
    "QuestionGridView",
    "QuestionUnit",
    "RecomposedArticleView",
    "UnitAnswer",
    "annotation_count",
    "build_all_views",
    "build_annotated",
    "build_grid",
    "build_headline_list",
    "build_news_article",
    "build_view_payload",
    "compose_recomposed",
    "render_html",
    "select_basis",
    "select_question_sequence",
    "select_summary",
    "visible_word_count",
]
