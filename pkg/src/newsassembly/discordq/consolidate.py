"""Answer consolidation baseline: single-link clustering on token overlap."""

from __future__ import annotations

from ..textutils import jaccard, token_set
from .types import AnswerGroup, AnswerSpan, PipelineConfig


def consolidate(answers: list[AnswerSpan], config: PipelineConfig) -> list[AnswerGroup]:
    """Cluster spans into answer groups.

    Two spans link when the Jaccard overlap of their normalized token sets is
    at least ``consolidation_similarity_threshold``; clusters are the
    connected components (single link). Groups come out ordered by size
    descending, then by the input position of their earliest member, which is
    story order when the pipeline supplies answers in story order. Each
    group's label is its first member's span text.
    """
    if not answers:
        return []
    sets = [token_set(a.span_text) for a in answers]
    parent = list(range(len(answers)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(answers)):
        for j in range(i + 1, len(answers)):
            if jaccard(sets[i], sets[j]) >= config.consolidation_similarity_threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    clusters: dict[int, list[int]] = {}
    for i in range(len(answers)):
        clusters.setdefault(find(i), []).append(i)

    ordered = sorted(clusters.values(), key=lambda ids: (-len(ids), ids[0]))
    return [
        AnswerGroup(
            group_id=gid,
            members=tuple(answers[i] for i in ids),
            label=answers[ids[0]].span_text,
        )
        for gid, ids in enumerate(ordered)
    ]


__all__ = ["consolidate"]
