"""Deterministic template-based question generation (the QGen baseline stage).

Three templates per sentence, each fired at most once:

* subject     "Who/What <verb-phrase>?"
* causal cue  "Why <main clause as a question>?"   (cues: because, due to)
* quantity    "How much/How many <head-noun>?"
"""

from __future__ import annotations

import re

from ..corpus import SourceArticle
from ..textutils import (
    is_auxiliary,
    looks_like_past,
    past_to_base,
    sentences,
)
from .types import CandidateQuestion

_CAUSAL_CUES = (" because ", " due to ")
_DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "some", "its", "his", "her", "their", "our", "my", "your"}
# Words safe to lowercase when they stop being sentence-initial.
_LOWERCASE_SAFE = _DETERMINERS | {"it", "he", "she", "they", "we", "i", "in", "on", "at", "after", "before", "most", "many", "all"}
_SCALE_WORDS = {"million", "billion", "trillion", "thousand", "hundred", "percent", "%"}
_NUMERIC = re.compile(r"^\$?\d[\d,.]*%?$")
_TRAILING_PUNCT = re.compile(r"[.,;:!?]+$")


def _clean_token(token: str) -> str:
    return _TRAILING_PUNCT.sub("", token)


def _decapitalize(token: str) -> str:
    return token.lower() if token.lower() in _LOWERCASE_SAFE else token


def _find_verb(tokens: list[str]) -> int | None:
    """Index of the first plausible finite verb; capitalized tokens are
    skipped because mid-sentence capitals are proper nouns, not verbs."""
    for i, raw in enumerate(tokens[1:], start=1):
        token = _clean_token(raw)
        if not token or token[0].isupper():
            continue
        if is_auxiliary(token) or looks_like_past(token):
            return i
    return None


def _subject_tokens(tokens: list[str], verb_index: int) -> list[str]:
    subject = [tokens[0]] + tokens[1:verb_index]
    return [_decapitalize(subject[0])] + subject[1:]


def _cut_at_cue(text: str) -> str:
    low = text.lower()
    for cue in _CAUSAL_CUES:
        pos = low.find(cue)
        if pos > 0:
            return text[:pos].rstrip(" ,;")
    return text


def _subject_question(sentence: str) -> str | None:
    clause = _cut_at_cue(sentence)
    tokens = clause.split()
    verb_index = _find_verb(tokens)
    if verb_index is None:
        return None
    head = tokens[0] if _clean_token(tokens[0]).lower() not in _DETERMINERS or len(tokens) == 1 else tokens[1]
    wh = "Who" if _clean_token(head)[:1].isupper() else "What"
    predicate = " ".join(tokens[verb_index:])
    predicate = _TRAILING_PUNCT.sub("", predicate)
    if not predicate:
        return None
    return f"{wh} {predicate}?"


def _why_question(sentence: str) -> str | None:
    low = sentence.lower()
    if not any(cue in low for cue in _CAUSAL_CUES):
        return None
    clause = _cut_at_cue(sentence)
    if clause == sentence:
        return None
    tokens = clause.split()
    verb_index = _find_verb(tokens)
    if verb_index is None:
        return None
    verb = _clean_token(tokens[verb_index])
    subject = " ".join(_subject_tokens(tokens, verb_index))
    rest = " ".join(tokens[verb_index + 1 :])
    rest = _TRAILING_PUNCT.sub("", rest)
    if is_auxiliary(verb):
        body = f"{verb} {subject} {rest}" if rest else f"{verb} {subject}"
    elif looks_like_past(verb):
        tail = f" {rest}" if rest else ""
        body = f"did {subject} {past_to_base(verb)}{tail}"
    else:
        return None
    return f"Why {body.strip()}?"


def _quantity_question(sentence: str) -> str | None:
    tokens = sentence.split()
    for i, raw in enumerate(tokens):
        token = _clean_token(raw)
        if not _NUMERIC.match(token):
            continue
        for follower in tokens[i + 1 :]:
            word = _clean_token(follower)
            if not word or word.lower() in _SCALE_WORDS or _NUMERIC.match(word):
                continue
            wh = "How many" if word.lower().endswith("s") else "How much"
            return f"{wh} {word.lower()}?"
        return None
    return None


_TEMPLATES = (
    ("subject", _subject_question),
    ("why", _why_question),
    ("quantity", _quantity_question),
)


def generate_questions_baseline(article: SourceArticle) -> list[CandidateQuestion]:
    """All template questions for one article; at most 3 per sentence.

    Partial articles yield an empty list.
    """
    if article.is_partial:
        return []
    out: list[CandidateQuestion] = []
    for p_index, paragraph in enumerate(article.paragraphs):
        for s_index, sentence in enumerate(sentences(paragraph)):
            for name, template in _TEMPLATES:
                text = template(sentence)
                if text is None:
                    continue
                out.append(
                    CandidateQuestion(
                        question_id=f"{article.source_domain}:p{p_index}:s{s_index}:{name}",
                        text=text,
                        origin_source=article.source_domain,
                        origin_paragraph=p_index,
                    )
                )
    return out


__all__ = ["generate_questions_baseline"]
