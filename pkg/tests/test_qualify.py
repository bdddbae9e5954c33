from __future__ import annotations

import pytest

from helpers import make_article, make_story

from newsassembly.discordq import (
    AnswerGroup,
    AnswerSpan,
    CandidateQuestion,
    PipelineConfig,
    foreign_answer_rate,
    qualify,
)
from newsassembly.errors import TooFewSources

CONFIG = PipelineConfig()
QUESTION = CandidateQuestion("q", "Why did the mayor raise taxes?")


def groups_of(sizes: list[int]) -> list[AnswerGroup]:
    groups = []
    source = 0
    for gid, size in enumerate(sizes):
        members = []
        for _ in range(size):
            members.append(
                AnswerSpan(f"s{source}.com", 0, 0, 4, "text")
            )
            source += 1
        groups.append(AnswerGroup(group_id=gid, members=tuple(members), label="text"))
    return groups


class TestQualify:
    def test_majority_group_rejected_for_diversity(self):
        # 3 answering sources in groups {2,1}: coverage passes (3 >= 3) but
        # the largest group holds 2/3 > 0.5 of the answers.
        verdict = qualify(QUESTION, groups_of([2, 1]), 10, 0.0, CONFIG)
        assert not verdict.accepted
        assert verdict.reason == "diversity"

    def test_balanced_groups_accepted(self):
        verdict = qualify(QUESTION, groups_of([2, 2]), 10, 0.0, CONFIG)
        assert verdict.accepted

    def test_low_coverage_rejected(self):
        verdict = qualify(QUESTION, groups_of([1, 1]), 10, 0.0, CONFIG)
        assert not verdict.accepted
        assert verdict.reason == "coverage"

    def test_foreign_rate_above_ceiling_rejected_for_specificity(self):
        verdict = qualify(QUESTION, groups_of([2, 2]), 10, 0.2, CONFIG)
        assert not verdict.accepted
        assert verdict.reason == "specificity"

    def test_first_failing_criterion_reported(self):
        # Fails all three; coverage is reported because order is a, b, c.
        verdict = qualify(QUESTION, groups_of([2]), 10, 0.9, CONFIG)
        assert verdict.reason == "coverage"

    def test_too_few_sources(self):
        with pytest.raises(TooFewSources):
            qualify(QUESTION, groups_of([2, 2]), 8, 0.0, CONFIG)

    def test_coverage_boundary_uses_ceiling(self):
        # 11 sources: ceil(0.3 * 11) = 4, so 3 answering sources fail.
        verdict = qualify(QUESTION, groups_of([1, 1, 1]), 11, 0.0, CONFIG)
        assert verdict.reason == "coverage"
        verdict = qualify(QUESTION, groups_of([1, 1, 1, 1]), 11, 0.0, CONFIG)
        assert verdict.accepted


class TestForeignAnswerRate:
    def _references(self, answering: int, total: int):
        articles = []
        for i in range(total):
            if i < answering:
                paragraphs = ["The mayor raised taxes quickly."]
            else:
                paragraphs = ["Weather stayed calm today."]
            articles.append(make_article(f"ref{i}.com", paragraphs))
        half = total // 2
        return [
            make_story(articles[:half], story_id="ref-a"),
            make_story(articles[half:], story_id="ref-b"),
        ]

    def test_unanswered_everywhere(self):
        assert foreign_answer_rate(QUESTION, self._references(0, 40), CONFIG) == 0.0

    def test_answered_in_four_of_forty(self):
        assert foreign_answer_rate(QUESTION, self._references(4, 40), CONFIG) == pytest.approx(0.1)

    def test_empty_reference_set(self):
        assert foreign_answer_rate(QUESTION, [], CONFIG) == 0.0

    def test_partial_reference_articles_excluded(self):
        stories = [make_story([make_article("p.com", is_partial=True)], story_id="ref")]
        assert foreign_answer_rate(QUESTION, stories, CONFIG) == 0.0
