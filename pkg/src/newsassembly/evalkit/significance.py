"""Pairwise significance tests and the bootstrap reproducibility analyses."""

from __future__ import annotations

import itertools
import random
from statistics import fmean, pvariance

from scipy import stats as scipy_stats

from ..errors import InsufficientData, SizeTooLarge
from .metrics import score
from .models import ExerciseResponse

DEFAULT_ALPHA = 0.05
DEFAULT_RESAMPLES = 40
PRIMARY_CONTRAST = ("annotated", "article")


def pairwise_test(group_a: list[float], group_b: list[float]) -> float:
    """Two-tailed Welch (unequal variance) t-test p-value.

    Two constant groups degenerate: equal means report p=1, different means
    p=0 (the t statistic diverges).
    """
    if len(group_a) < 2 or len(group_b) < 2:
        raise InsufficientData(
            f"need >= 2 observations per group, got {len(group_a)} and {len(group_b)}"
        )
    if pvariance(group_a) == 0.0 and pvariance(group_b) == 0.0:
        return 1.0 if fmean(group_a) == fmean(group_b) else 0.0
    result = scipy_stats.ttest_ind(group_a, group_b, equal_var=False)
    return float(result.pvalue)


def _participants(responses: list[ExerciseResponse]) -> list[str]:
    return sorted({r.participant_id for r in responses})


def _interface_pairs(responses: list[ExerciseResponse]) -> list[tuple[str, str]]:
    kinds = sorted({r.interface_kind for r in responses})
    return list(itertools.combinations(kinds, 2))


def pair_key(pair: tuple[str, str]) -> str:
    return f"{pair[0]}_vs_{pair[1]}"


def pairwise_score_tests(responses: list[ExerciseResponse]) -> dict[str, float]:
    """Welch p-value of the answer-score contrast for every interface pair."""
    by_kind: dict[str, list[int]] = {}
    for response in responses:
        by_kind.setdefault(response.interface_kind, []).append(score(response))
    out: dict[str, float] = {}
    for a, b in itertools.combinations(sorted(by_kind), 2):
        out[pair_key((a, b))] = pairwise_test(by_kind[a], by_kind[b])
    return out


def _significant(p: float | None, alpha: float) -> bool:
    return p is not None and p < alpha


def _test_subset(
    responses: list[ExerciseResponse], pair: tuple[str, str]
) -> float | None:
    groups: dict[str, list[int]] = {pair[0]: [], pair[1]: []}
    for response in responses:
        if response.interface_kind in groups:
            groups[response.interface_kind].append(score(response))
    try:
        return pairwise_test(groups[pair[0]], groups[pair[1]])
    except InsufficientData:
        return None


def bootstrap_participants(
    responses: list[ExerciseResponse],
    sizes: list[int],
    resamples: int = DEFAULT_RESAMPLES,
    alpha: float = DEFAULT_ALPHA,
    seed: int = 0,
    with_replacement: bool = False,
) -> dict[int, dict[str, float]]:
    """size -> interface pair -> fraction of resamples significant.

    Each resample draws a participant subset (without replacement by
    default), keeps only their responses and reruns every pairwise score
    test. Sub-seeds derive from (seed, size, iteration) so iterations are
    order-independent and the whole analysis replays bit-identically.
    """
    pool = _participants(responses)
    pairs = _interface_pairs(responses)
    by_participant: dict[str, list[ExerciseResponse]] = {}
    for response in responses:
        by_participant.setdefault(response.participant_id, []).append(response)

    out: dict[int, dict[str, float]] = {}
    for size in sizes:
        if size > len(pool):
            raise SizeTooLarge(f"size {size} exceeds participant pool of {len(pool)}")
        hits = {pair: 0 for pair in pairs}
        for iteration in range(resamples):
            rng = random.Random(f"{seed}:{size}:{iteration}")
            if with_replacement:
                chosen = [rng.choice(pool) for _ in range(size)]
            else:
                chosen = rng.sample(pool, size)
            subset = [r for p in chosen for r in by_participant[p]]
            for pair in pairs:
                if _significant(_test_subset(subset, pair), alpha):
                    hits[pair] += 1
        out[size] = {pair_key(pair): hits[pair] / resamples for pair in pairs}
    return out


def bootstrap_stories(
    responses: list[ExerciseResponse],
    keep: int,
    alpha: float = DEFAULT_ALPHA,
    contrast: tuple[str, str] = PRIMARY_CONTRAST,
) -> float:
    """Fraction of all C(n, keep) story subsets with a significant contrast.

    Subsets are enumerated exhaustively; the default contrast is the
    annotated-article vs news-article score difference. Subsets that cannot
    be tested (too little data for a group) count as not significant.
    """
    stories = sorted({r.story_id for r in responses})
    if not 1 <= keep <= len(stories):
        raise SizeTooLarge(f"keep={keep} out of range for {len(stories)} stories")
    contrast = tuple(sorted(contrast))  # type: ignore[assignment]
    significant = 0
    total = 0
    for subset in itertools.combinations(stories, keep):
        chosen = set(subset)
        rows = [r for r in responses if r.story_id in chosen]
        total += 1
        if _significant(_test_subset(rows, contrast), alpha):
            significant += 1
    return significant / total


def default_sizes(participant_count: int, step: int = 5) -> list[int]:
    """5, 10, ... capped at the participant count."""
    return [s for s in range(step, participant_count + 1, step)]


def build_significance_report(
    responses: list[ExerciseResponse],
    seed: int,
    resamples: int = DEFAULT_RESAMPLES,
    alpha: float = DEFAULT_ALPHA,
    sizes: list[int] | None = None,
    with_replacement: bool = False,
) -> dict:
    """The full SignificanceReport as a JSON-ready dict."""
    participants = _participants(responses)
    stories = sorted({r.story_id for r in responses})
    if sizes is None:
        sizes = default_sizes(len(participants))
    story_fractions = {}
    for keep in (len(stories) - 1, len(stories) - 2):
        if keep >= 1:
            story_fractions[str(keep)] = bootstrap_stories(responses, keep, alpha)
    return {
        "seed": seed,
        "alpha": alpha,
        "resamples": resamples,
        "participants": len(participants),
        "stories": len(stories),
        "pairwise": pairwise_score_tests(responses),
        "bootstrap_participants": {
            str(size): fractions
            for size, fractions in bootstrap_participants(
                responses, sizes, resamples, alpha, seed, with_replacement
            ).items()
        },
        "bootstrap_stories": story_fractions,
    }
