"""Story corpus: HTML extraction, the immutable story model, and file IO.

A story corpus file holds one story as JSON (UTF-8):

    { "story_id", "title", "retrieved_at" (RFC 3339),
      "articles": [ { "source_domain", "url", "headline",
                      "summary" (nullable), "paragraphs": [...],
                      "is_partial" } ] }

``word_count`` is always derived from paragraphs, never stored.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from datetime import datetime
from html.parser import HTMLParser
from pathlib import Path

from .errors import IoError, MalformedDocument, NoFullArticle, SchemaError
from .textutils import word_count

_BLANK_LINE = re.compile(r"\n\s*\n")


def paragraph_split(body: str) -> list[str]:
    """Split plain text into paragraphs on blank-line boundaries."""
    parts = _BLANK_LINE.split(body)
    return [p.strip() for p in parts if p.strip()]


@dataclass(frozen=True)
class SourceArticle:
    source_domain: str
    url: str
    headline: str
    summary: str | None
    paragraphs: tuple[str, ...]
    is_partial: bool = False

    @property
    def word_count(self) -> int:
        return sum(word_count(p) for p in self.paragraphs)

    def validate(self) -> None:
        if not self.headline:
            raise SchemaError(f"article {self.source_domain!r}: headline missing")
        if self.is_partial and self.paragraphs:
            raise SchemaError(f"article {self.source_domain!r}: partial article has paragraphs")
        if any(not p.strip() for p in self.paragraphs):
            raise SchemaError(f"article {self.source_domain!r}: empty paragraph entry")


@dataclass(frozen=True)
class Story:
    story_id: str
    title: str
    articles: tuple[SourceArticle, ...]
    retrieved_at: datetime

    def validate(self) -> None:
        seen: set[str] = set()
        for article in self.articles:
            article.validate()
            if article.source_domain in seen:
                raise SchemaError(f"duplicate source_domain {article.source_domain!r}")
            seen.add(article.source_domain)

    def article_for(self, source_domain: str) -> SourceArticle:
        for article in self.articles:
            if article.source_domain == source_domain:
                return article
        raise KeyError(source_domain)

    def source_order(self, source_domain: str) -> int:
        for i, article in enumerate(self.articles):
            if article.source_domain == source_domain:
                return i
        raise KeyError(source_domain)

    @property
    def full_articles(self) -> list[SourceArticle]:
        return [a for a in self.articles if not a.is_partial]


_SKIP_CONTAINERS = {"nav", "header", "footer", "aside", "script", "style", "noscript", "form"}


class _ArticleHTMLParser(HTMLParser):
    """Minimal readability pass: title/meta metadata plus body <p> blocks."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.title_parts: list[str] = []
        self.h1_parts: list[str] = []
        self.meta: dict[str, str] = {}
        self.paragraphs: list[str] = []
        self._skip_depth = 0
        self._in_title = False
        self._in_h1 = False
        self._p_parts: list[str] | None = None

    def handle_starttag(self, tag: str, attrs: list[tuple[str, str | None]]) -> None:
        if tag in _SKIP_CONTAINERS:
            self._skip_depth += 1
            return
        if self._skip_depth:
            return
        if tag == "title":
            self._in_title = True
        elif tag == "h1":
            self._in_h1 = True
        elif tag == "meta":
            attr = dict(attrs)
            key = attr.get("name") or attr.get("property")
            content = attr.get("content")
            if key and content:
                self.meta[key.lower()] = content
        elif tag == "p":
            self._p_parts = []
        elif tag == "br" and self._p_parts is not None:
            self._p_parts.append(" ")

    def handle_endtag(self, tag: str) -> None:
        if tag in _SKIP_CONTAINERS:
            self._skip_depth = max(0, self._skip_depth - 1)
            return
        if tag == "title":
            self._in_title = False
        elif tag == "h1":
            self._in_h1 = False
        elif tag == "p" and self._p_parts is not None:
            text = " ".join("".join(self._p_parts).split())
            if text:
                self.paragraphs.append(text)
            self._p_parts = None

    def handle_data(self, data: str) -> None:
        if self._skip_depth:
            return
        if self._in_title:
            self.title_parts.append(data)
        if self._in_h1:
            self.h1_parts.append(data)
        if self._p_parts is not None:
            self._p_parts.append(data)


def _clean(text: str) -> str:
    return " ".join(text.split())


def extract_article(document: str, url: str) -> SourceArticle:
    """Extract a SourceArticle from raw HTML.

    Headline comes from og:title, <title>, or <h1>; summary from description
    metadata when present. Documents with no recoverable body text become
    partial (metadata-only) articles.
    """
    if not document.strip():
        raise MalformedDocument(f"empty document for {url}")
    parser = _ArticleHTMLParser()
    parser.feed(document)
    parser.close()

    headline = _clean(
        parser.meta.get("og:title", "")
        or "".join(parser.title_parts)
        or "".join(parser.h1_parts)
    )
    if not headline:
        raise MalformedDocument(f"no headline recovered from {url}")
    summary = _clean(parser.meta.get("description", "") or parser.meta.get("og:description", ""))
    paragraphs = tuple(parser.paragraphs)
    return SourceArticle(
        source_domain=registrable_domain(url),
        url=url,
        headline=headline,
        summary=summary or None,
        paragraphs=paragraphs,
        is_partial=not paragraphs,
    )


def registrable_domain(url: str) -> str:
    """Hostname with a leading www. stripped; good enough as a source key."""
    m = re.match(r"^[a-z][a-z0-9+.-]*://([^/:?#]+)", url, flags=re.IGNORECASE)
    host = (m.group(1) if m else url).lower()
    return host[4:] if host.startswith("www.") else host


def article_to_dict(article: SourceArticle) -> dict:
    return {
        "source_domain": article.source_domain,
        "url": article.url,
        "headline": article.headline,
        "summary": article.summary,
        "paragraphs": list(article.paragraphs),
        "is_partial": article.is_partial,
    }


def article_from_dict(raw: dict) -> SourceArticle:
    try:
        return SourceArticle(
            source_domain=raw["source_domain"],
            url=raw["url"],
            headline=raw["headline"],
            summary=raw.get("summary"),
            paragraphs=tuple(raw["paragraphs"]),
            is_partial=bool(raw["is_partial"]),
        )
    except KeyError as exc:
        raise SchemaError(f"article record missing field {exc.args[0]!r}") from exc


def story_to_dict(story: Story) -> dict:
    return {
        "story_id": story.story_id,
        "title": story.title,
        "retrieved_at": story.retrieved_at.isoformat(),
        "articles": [article_to_dict(a) for a in story.articles],
    }


def story_from_dict(raw: dict) -> Story:
    try:
        retrieved = _parse_rfc3339(raw["retrieved_at"])
        story = Story(
            story_id=raw["story_id"],
            title=raw["title"],
            articles=tuple(article_from_dict(a) for a in raw["articles"]),
            retrieved_at=retrieved,
        )
    except KeyError as exc:
        raise SchemaError(f"story record missing field {exc.args[0]!r}") from exc
    story.validate()
    return story


def _parse_rfc3339(value: str) -> datetime:
    try:
        return datetime.fromisoformat(value.replace("Z", "+00:00"))
    except (ValueError, AttributeError) as exc:
        raise SchemaError(f"retrieved_at is not RFC 3339: {value!r}") from exc


def load_story(path: str | Path) -> Story:
    """Load and validate one story corpus file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    return story_from_dict(raw)


def save_story(story: Story, path: str | Path) -> None:
    story.validate()
    try:
        Path(path).write_text(
            json.dumps(story_to_dict(story), ensure_ascii=False, indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def median_article(story: Story) -> str:
    """source_domain of the lower-median-length non-partial article.

    Ties in word count keep story order; even counts take the lower median.
    """
    full = story.full_articles
    if not full:
        raise NoFullArticle(f"story {story.story_id!r} has no full article")
    ranked = sorted(full, key=lambda a: a.word_count)
    return ranked[(len(ranked) - 1) // 2].source_domain
