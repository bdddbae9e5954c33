"""Builders for the five interface views of a story."""

from __future__ import annotations

from collections import defaultdict

from ..corpus import SourceArticle, Story, median_article
from ..discordq.types import AnswerSpan, DiscordQuestion, DiscordQuestionSet
from ..errors import EmptyQuestionSet
from ..textutils import word_count
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
    annotation_block,
    article_view_payload,
    grid_payload,
    headlines_payload,
    paragraph_block,
    recomposed_payload,
)

SUMMARY_TARGET_WORDS = 60


def _spans_in(question: DiscordQuestion, source_domain: str) -> list[AnswerSpan]:
    return [
        m
        for g in question.groups
        for m in g.members
        if m.source_domain == source_domain
    ]


def _first_span_per_source(question: DiscordQuestion) -> dict[str, AnswerSpan]:
    first: dict[str, AnswerSpan] = {}
    for group in question.groups:
        for member in group.members:
            first.setdefault(member.source_domain, member)
    return first


def annotation_count(article: SourceArticle, dqset: DiscordQuestionSet) -> int:
    """Number of discord questions with at least one answer in ``article``."""
    return sum(1 for q in dqset.questions if _spans_in(q, article.source_domain))


def select_basis(story: Story, dqset: DiscordQuestionSet) -> str:
    """source_domain of the article accommodating the most annotations.

    Ties prefer the longer article, then the alphabetically first source.
    When no article answers any question the median-length article is used.
    """
    candidates = [
        (annotation_count(a, dqset), a.word_count, a.source_domain) for a in story.full_articles
    ]
    if not candidates:
        return median_article(story)  # raises NoFullArticle
    count, _, source = min(candidates, key=lambda c: (-c[0], -c[1], c[2]))
    if count == 0:
        return median_article(story)
    return source


def build_annotated(story: Story, dqset: DiscordQuestionSet) -> ArticleView:
    """Basis article with one collapsed annotation per question it answers.

    Each annotation anchors at the first basis paragraph answering its
    question; several annotations on one paragraph order by descending answer
    count then ascending question text. Annotation answers list one span per
    non-basis source in story order.
    """
    basis = select_basis(story, dqset)
    article = story.article_for(basis)
    by_anchor: dict[int, list[tuple[int, str, Annotation]]] = defaultdict(list)
    for question in dqset.questions:
        own_spans = _spans_in(question, basis)
        if not own_spans:
            continue
        anchor = min(s.paragraph_index for s in own_spans)
        first_per_source = _first_span_per_source(question)
        answers = tuple(
            AnnotationAnswer(
                source_domain=a.source_domain,
                span_text=first_per_source[a.source_domain].span_text,
                url=a.url,
            )
            for a in story.articles
            if a.source_domain != basis and a.source_domain in first_per_source
        )
        annotation = Annotation(
            question_id=question.question.question_id,
            question_text=question.question.text,
            anchor_paragraph=anchor,
            answers=answers,
        )
        by_anchor[anchor].append((question.total_answers, question.question.text, annotation))

    blocks: list[dict] = []
    for index, paragraph in enumerate(article.paragraphs):
        blocks.append(paragraph_block(paragraph))
        for _, _, annotation in sorted(by_anchor.get(index, []), key=lambda t: (-t[0], t[1])):
            blocks.append(annotation_block(annotation))
    return ArticleView(
        basis_source=basis,
        headline=article.headline,
        byline=f"Source: {basis}",
        blocks=tuple(blocks),
    )


def build_news_article(story: Story) -> ArticleView:
    """The unannotated median-length article."""
    basis = median_article(story)
    article = story.article_for(basis)
    return ArticleView(
        basis_source=basis,
        headline=article.headline,
        byline=f"Source: {basis}",
        blocks=tuple(paragraph_block(p) for p in article.paragraphs),
    )


def build_headline_list(story: Story) -> HeadlineListView:
    """All sources in ingestion order, partial articles included."""
    return HeadlineListView(
        entries=tuple(
            HeadlineEntry(source_domain=a.source_domain, headline=a.headline, url=a.url)
            for a in story.articles
        )
    )


def select_summary(story: Story, fallback_source: str | None = None) -> str:
    """The article summary closest to 60 words, or a leading-60-word excerpt.

    Ties prefer the earlier source. Without any summaries the excerpt comes
    from ``fallback_source`` when given, otherwise from the median article.
    """
    best: tuple[int, int] | None = None
    best_summary = None
    for index, article in enumerate(story.articles):
        if not article.summary:
            continue
        key = (abs(word_count(article.summary) - SUMMARY_TARGET_WORDS), index)
        if best is None or key < best:
            best = key
            best_summary = article.summary
    if best_summary is not None:
        return best_summary
    source = fallback_source or median_article(story)
    text = " ".join(story.article_for(source).paragraphs)
    return " ".join(text.split()[:SUMMARY_TARGET_WORDS])


def select_question_sequence(
    questions: tuple[DiscordQuestion, ...]
) -> list[tuple[DiscordQuestion, int]]:
    """Greedy composition order with each question's selection-time score.

    Every iteration scores remaining questions by how many of their answering
    (source, paragraph) pairs are still unseen, takes the best (ties: more
    total answers, then ascending text), and stops when nothing new is left.
    """
    remaining = list(questions)
    seen: set[tuple[str, int]] = set()
    sequence: list[tuple[DiscordQuestion, int]] = []
    while remaining:
        best = min(
            remaining,
            key=lambda q: (
                -len(q.answer_pairs - seen),
                -q.total_answers,
                q.question.text,
            ),
        )
        score = len(best.answer_pairs - seen)
        if score == 0:
            break
        sequence.append((best, score))
        seen |= best.answer_pairs
        remaining.remove(best)
    return sequence


def _unit_answer(story: Story, span: AnswerSpan) -> UnitAnswer:
    article = story.article_for(span.source_domain)
    return UnitAnswer(
        source_domain=span.source_domain,
        paragraph_text=article.paragraphs[span.paragraph_index],
        bold_char_range=(span.char_start, span.char_end),
        url=article.url,
    )


def _question_unit(story: Story, question: DiscordQuestion) -> QuestionUnit:
    groups = sorted(question.groups, key=lambda g: (-len(g.members), g.group_id))
    primary = [groups[0].members[0]]
    for group in groups[1:]:
        representative = group.members[0]
        if representative.source_domain != primary[0].source_domain:
            primary.append(representative)
            break
    chosen = {id(span) for span in primary}
    carousel = []
    for group in groups:
        for member in group.members:
            if id(member) in chosen:
                continue
            carousel.append((len(group.members), member))
    carousel.sort(key=lambda t: (-t[0], story.source_order(t[1].source_domain)))
    return QuestionUnit(
        question_text=question.question.text,
        primary_answers=tuple(_unit_answer(story, s) for s in primary),
        carousel_answers=tuple(_unit_answer(story, s) for _, s in carousel),
    )


def compose_recomposed(story: Story, dqset: DiscordQuestionSet) -> RecomposedArticleView:
    """Greedy-ordered question units behind an introductory summary."""
    if not dqset.questions:
        raise EmptyQuestionSet(f"story {story.story_id!r} has no discord questions")
    sequence = select_question_sequence(dqset.questions)
    units = tuple(_question_unit(story, q) for q, _ in sequence)
    used_sources = {a.source_domain for u in units for a in u.primary_answers + u.carousel_answers}
    byline = tuple(a.source_domain for a in story.articles if a.source_domain in used_sources)
    return RecomposedArticleView(
        story_title=story.title,
        byline_sources=byline,
        intro_summary=select_summary(story),
        units=units,
    )


def build_grid(story: Story, dqset: DiscordQuestionSet) -> QuestionGridView:
    """(question, source) matrix with per-group styling.

    Rows sort by answer count descending (ties: ascending text); columns by
    questions answered descending (ties: story order). Style indices rank a
    row's groups by size (largest first) modulo the 8-entry palette.
    """
    if not dqset.questions:
        raise EmptyQuestionSet(f"story {story.story_id!r} has no discord questions")
    rows = sorted(dqset.questions, key=lambda q: (-q.total_answers, q.question.text))
    row_spans = [_first_span_per_source(q) for q in rows]

    answered_by: dict[str, int] = defaultdict(int)
    for spans in row_spans:
        for source in spans:
            answered_by[source] += 1
    cols = sorted(
        ((a.source_domain, answered_by.get(a.source_domain, 0)) for a in story.articles),
        key=lambda item: (-item[1], story.source_order(item[0])),
    )
    col_index = {source: i for i, (source, _) in enumerate(cols)}

    cells: dict[tuple[int, int], GridCell] = {}
    for row, (question, spans) in enumerate(zip(rows, row_spans)):
        ranked = sorted(question.groups, key=lambda g: (-len(g.members), g.group_id))
        style_of = {group.group_id: rank % PALETTE_SIZE for rank, group in enumerate(ranked)}
        group_of = {
            (m.source_domain, m.paragraph_index, m.char_start): g.group_id
            for g in question.groups
            for m in g.members
        }
        for source, span in spans.items():
            gid = group_of[(span.source_domain, span.paragraph_index, span.char_start)]
            cells[(row, col_index[source])] = GridCell(
                group_id=gid,
                style_index=style_of[gid],
                span_text=span.span_text,
                url=story.article_for(source).url,
            )
    return QuestionGridView(
        row_questions=tuple((q.question.text, q.total_answers) for q in rows),
        col_sources=tuple(cols),
        cells=cells,
    )


def build_view_payload(kind: str, story: Story, dqset: DiscordQuestionSet) -> dict:
    if kind == ANNOTATED:
        return article_view_payload(build_annotated(story, dqset))
    if kind == RECOMPOSED:
        return recomposed_payload(compose_recomposed(story, dqset))
    if kind == GRID:
        return grid_payload(build_grid(story, dqset))
    if kind == HEADLINES:
        return headlines_payload(build_headline_list(story))
    if kind == ARTICLE:
        return article_view_payload(build_news_article(story))
    raise ValueError(f"unknown view kind {kind!r}")


def build_all_views(
    story: Story, dqset: DiscordQuestionSet
) -> tuple[dict[str, dict], dict[str, str]]:
    """All five payloads; build failures land in the error map by kind."""
    views: dict[str, dict] = {}
    errors: dict[str, str] = {}
    for kind in ALL_KINDS:
        try:
            views[kind] = build_view_payload(kind, story, dqset)
        except Exception as exc:  # noqa: BLE001 - record per-kind failures
            errors[kind] = f"{type(exc).__name__}: {exc}"
    return views, errors


def visible_word_count(kind: str, payload: dict) -> int:
    """Word count of the text a reader sees by default in a view payload."""
    if kind in (ANNOTATED, ARTICLE):
        total = word_count(payload["headline"]) + word_count(payload["byline"])
        for block in payload["blocks"]:
            if block["type"] == "paragraph":
                total += word_count(block["text"])
            else:
                total += word_count(block["question_text"])  # collapsed by default
        return total
    if kind == RECOMPOSED:
        total = word_count(payload["story_title"]) + word_count(payload["intro_summary"])
        for unit in payload["units"]:
            total += word_count(unit["question_text"])
            for answer in unit["primary_answers"] + unit["carousel_answers"]:
                total += word_count(answer["paragraph_text"])
        return total
    if kind == GRID:
        total = sum(word_count(r["question_text"]) for r in payload["row_questions"])
        total += sum(word_count(c["source_domain"]) for c in payload["col_sources"])
        return total
    if kind == HEADLINES:
        return sum(word_count(e["headline"]) for e in payload["entries"])
    raise ValueError(f"unknown view kind {kind!r}")
