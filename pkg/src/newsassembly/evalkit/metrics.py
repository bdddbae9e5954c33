"""Answer scoring and per-interface metric aggregation."""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean

from ..errors import EmptyGroup, EmptyInput
from .models import PREDICTION_CATEGORIES, ExerciseResponse

BUCKET_NO_ANS = "no_ans"
BUCKET_S0 = "s0"
BUCKET_S1 = "s1"
BUCKET_S2PLUS = "s2plus"


def score(response: ExerciseResponse) -> int:
    """Number of distinct aspects the answer mentions; blanks score 0."""
    return 0 if response.is_blank else len(response.aspect_ids)


def bucket(response: ExerciseResponse) -> str:
    """Disjoint score buckets: blank / zero / one / two-or-more."""
    if response.is_blank:
        return BUCKET_NO_ANS
    value = score(response)
    if value == 0:
        return BUCKET_S0
    if value == 1:
        return BUCKET_S1
    return BUCKET_S2PLUS


@dataclass(frozen=True)
class InterfaceMetrics:
    score_mean: float
    pct_no_ans: float
    pct_s0: float
    pct_s1: float
    pct_s2plus: float
    links_mean: float
    pct_any_link: float
    words_mean: float
    minutes_mean: float

    def to_dict(self) -> dict:
        return {
            "score_mean": self.score_mean,
            "pct_no_ans": self.pct_no_ans,
            "pct_s0": self.pct_s0,
            "pct_s1": self.pct_s1,
            "pct_s2plus": self.pct_s2plus,
            "links_mean": self.links_mean,
            "pct_any_link": self.pct_any_link,
            "words_mean": self.words_mean,
            "minutes_mean": self.minutes_mean,
        }


def _session_key(response: ExerciseResponse) -> tuple[str, str, str]:
    return (response.participant_id, response.story_id, response.interface_kind)


def aggregate_group(responses: list[ExerciseResponse]) -> InterfaceMetrics:
    """Metrics over one interface's responses.

    The score mean covers every response with blanks counted as 0; the four
    percentage buckets are disjoint and sum to 100. Link/word/time statistics
    average per exercise session (participant x story x interface); rows of
    one session normally repeat the session value, so the session statistic
    is the maximum across its rows.
    """
    if not responses:
        raise EmptyGroup("no responses in group")
    n = len(responses)
    buckets = {BUCKET_NO_ANS: 0, BUCKET_S0: 0, BUCKET_S1: 0, BUCKET_S2PLUS: 0}
    for response in responses:
        buckets[bucket(response)] += 1

    sessions: dict[tuple, dict] = {}
    for response in responses:
        stat = sessions.setdefault(
            _session_key(response), {"links": 0, "words": 0, "seconds": 0.0}
        )
        stat["links"] = max(stat["links"], response.links_opened)
        stat["words"] = max(stat["words"], response.words_shown)
        stat["seconds"] = max(stat["seconds"], response.duration_seconds)

    session_stats = list(sessions.values())
    return InterfaceMetrics(
        score_mean=fmean(score(r) for r in responses),
        pct_no_ans=100.0 * buckets[BUCKET_NO_ANS] / n,
        pct_s0=100.0 * buckets[BUCKET_S0] / n,
        pct_s1=100.0 * buckets[BUCKET_S1] / n,
        pct_s2plus=100.0 * buckets[BUCKET_S2PLUS] / n,
        links_mean=fmean(s["links"] for s in session_stats),
        pct_any_link=100.0 * sum(1 for s in session_stats if s["links"] > 0) / len(session_stats),
        words_mean=fmean(s["words"] for s in session_stats),
        minutes_mean=fmean(s["seconds"] / 60.0 for s in session_stats),
    )


def aggregate(responses: list[ExerciseResponse]) -> dict[str, InterfaceMetrics]:
    """Per-interface metrics, keyed by interface kind."""
    if not responses:
        raise EmptyGroup("no responses to aggregate")
    by_kind: dict[str, list[ExerciseResponse]] = {}
    for response in responses:
        by_kind.setdefault(response.interface_kind, []).append(response)
    return {kind: aggregate_group(group) for kind, group in sorted(by_kind.items())}


def prediction_breakdown(categories: list[str]) -> tuple[float, float, float]:
    """Percentages of one-sided / hypothetical / two-sided answers."""
    if not categories:
        raise EmptyInput("no labeled answers")
    unknown = set(categories) - set(PREDICTION_CATEGORIES)
    if unknown:
        raise EmptyInput(f"unknown categories {sorted(unknown)}")
    n = len(categories)
    return tuple(100.0 * categories.count(c) / n for c in PREDICTION_CATEGORIES)  # type: ignore[return-value]


def scores_by_interface(responses: list[ExerciseResponse]) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    for response in responses:
        out.setdefault(response.interface_kind, []).append(score(response))
    return out
