"""Shared lexical helpers: tokenization, stemming, sentence and word splitting.

The stopword list and the stemmer are fixed and versioned here because every
pipeline stage that compares token sets depends on them; changing either
changes pipeline output byte-for-byte.
"""

from __future__ import annotations

import re

# Fixed English stopword list, v1. Function words only; content words never
# belong here because QA overlap scores are computed on what remains.
STOPWORDS = frozenset(
    """
    a about above after again against all am an and any are as at be because
    been before being below between both but by could did do does doing down
    due during each few for from further had has have having he her here hers
    herself him himself his how i if in into is it its itself just may me
    might more most must my myself no nor not now of off on once only or
    other our ours ourselves out over own same shall she should so some such
    than that the their theirs them themselves then there these they this
    those through to too under until up very was we were what when where
    which while who whom whose why will with would you your yours yourself
    yourselves much many
    """.split()
)

WH_WORDS = frozenset({"who", "what", "when", "where", "why", "how", "which", "whom", "whose"})

# Auxiliaries and modals; used both for verb detection and question fronting.
AUXILIARIES = (
    "is are was were am be been being has have had do does did "
    "will would shall should can could may might must"
).split()
_AUX_SET = frozenset(AUXILIARIES)

# Small irregular simple-past table; enough for headline-register news prose.
IRREGULAR_PAST = {
    "was": "be", "were": "be", "had": "have", "said": "say", "made": "make",
    "went": "go", "took": "take", "came": "come", "saw": "see", "knew": "know",
    "got": "get", "gave": "give", "found": "find", "told": "tell",
    "became": "become", "showed": "show", "left": "leave", "felt": "feel",
    "brought": "bring", "began": "begin", "kept": "keep", "held": "hold",
    "wrote": "write", "stood": "stand", "heard": "hear", "meant": "mean",
    "met": "meet", "ran": "run", "paid": "pay", "sat": "sit", "spoke": "speak",
    "led": "lead", "grew": "grow", "lost": "lose", "fell": "fall",
    "sent": "send", "built": "build", "understood": "understand",
    "drew": "draw", "broke": "break", "spent": "spend", "rose": "rise",
    "drove": "drive", "bought": "buy", "wore": "wear", "chose": "choose",
    "sought": "seek", "thought": "think", "fought": "fight",
    "caught": "catch", "taught": "teach", "sold": "sell", "won": "win",
    "struck": "strike", "threw": "throw", "laid": "lay", "shot": "shoot",
    "fled": "flee", "swore": "swear", "bore": "bear", "beat": "beat",
    "cut": "cut", "put": "put", "set": "set", "hit": "hit", "let": "let",
    "cost": "cost", "spread": "spread", "quit": "quit", "shut": "shut",
}

_WORD_RE = re.compile(r"[A-Za-z0-9']+")
_VOWELS = "aeiou"


def words(text: str) -> list[str]:
    """Whitespace-style word tokens, punctuation stripped, case preserved."""
    return _WORD_RE.findall(text)


def word_count(text: str) -> int:
    """Number of whitespace-separated tokens (the corpus word-count rule)."""
    return len(text.split())


def _strip_ed(base: str) -> str:
    # base already has "ed" removed
    if len(base) >= 3 and base[-1] == base[-2] and base[-1] not in _VOWELS and base[-1] not in "lsz":
        return base[:-1]  # planned -> plan, stopped -> stop
    if base and base[-1] in "cgsuvz":
        return base + "e"  # rais -> raise, chang -> change
    return base


def past_to_base(verb: str) -> str:
    """Heuristic simple-past -> base form; used to phrase generated questions."""
    low = verb.lower()
    if low in IRREGULAR_PAST:
        return IRREGULAR_PAST[low]
    if len(low) > 4 and low.endswith("ied"):
        return low[:-3] + "y"
    if len(low) > 3 and low.endswith("ed"):
        return _strip_ed(low[:-2])
    return low


def stem(token: str) -> str:
    """Light suffix stemmer so inflected forms compare equal across stages."""
    w = token.lower()
    if w in IRREGULAR_PAST:
        return IRREGULAR_PAST[w]
    if len(w) > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if len(w) > 4 and w.endswith("ied"):
        return w[:-3] + "y"
    if len(w) > 4 and w.endswith("ing"):
        return _strip_ed(w[:-3])
    if len(w) > 3 and w.endswith("ed"):
        return _strip_ed(w[:-2])
    if len(w) > 3 and w.endswith("es") and w[-3] in "xzh":
        return w[:-2]
    if len(w) > 3 and w.endswith("s") and not w.endswith("ss"):
        return w[:-1]
    return w


def token_set(text: str) -> frozenset[str]:
    """All normalized+stemmed tokens of a text (stopwords kept)."""
    return frozenset(stem(w) for w in words(text))


def content_word_set(text: str) -> frozenset[str]:
    """Normalized+stemmed tokens minus stopwords and wh-words."""
    out = set()
    for w in words(text):
        low = w.lower()
        if low in STOPWORDS or low in WH_WORDS:
            continue
        out.add(stem(low))
    return frozenset(out)


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    if not a or not b:
        return 0.0
    inter = len(a & b)
    if inter == 0:
        return 0.0
    return inter / (len(a) + len(b) - inter)


_SENT_BOUNDARY = re.compile(r"(?<=[.!?])[\"')\]]*\s+")


def sentence_spans(text: str) -> list[tuple[int, int]]:
    """Character spans of sentences within ``text``, whitespace-trimmed.

    Splits after ., ! or ? followed by whitespace; good enough for extracted
    news paragraphs.
    """
    spans: list[tuple[int, int]] = []
    start = 0
    for match in _SENT_BOUNDARY.finditer(text):
        spans.append((start, match.start()))
        start = match.end()
    if start < len(text):
        spans.append((start, len(text)))
    trimmed = []
    for s, e in spans:
        while s < e and text[s].isspace():
            s += 1
        while e > s and text[e - 1].isspace():
            e -= 1
        if e > s:
            trimmed.append((s, e))
    return trimmed


def sentences(text: str) -> list[str]:
    return [text[s:e] for s, e in sentence_spans(text)]


def is_auxiliary(token: str) -> bool:
    return token.lower() in _AUX_SET


def looks_like_past(token: str) -> bool:
    low = token.lower()
    return low in IRREGULAR_PAST or (len(low) > 3 and low.endswith("ed"))
