from __future__ import annotations

import random

import pytest

from helpers import make_article, make_dq, make_dqset, make_story

from newsassembly.assembly import (
    build_grid,
    compose_recomposed,
    select_question_sequence,
)
from newsassembly.errors import EmptyQuestionSet


def grid_story(n_sources: int = 6, n_paragraphs: int = 12):
    return make_story(
        [
            make_article(
                f"s{i}.com",
                [f"Source {i} paragraph {j} body words here." for j in range(n_paragraphs)],
            )
            for i in range(n_sources)
        ]
    )


def reference_greedy_trace(questions):
    """Independently written exhaustive trace of the composition loop.

    Rescans every remaining question each round and recomputes scores from
    scratch instead of maintaining incremental state.
    """
    chosen = []
    seen_pairs = []
    pool = list(questions)
    while True:
        best = None
        for q in pool:
            fresh = 0
            for pair in sorted(q.answer_pairs):
                if pair not in seen_pairs:
                    fresh += 1
            key = (-fresh, -q.total_answers, q.question.text)
            if best is None or key < best[0]:
                best = (key, q, fresh)
        if best is None or best[2] == 0:
            break
        _, question, fresh = best
        chosen.append((question.question.text, fresh))
        for pair in question.answer_pairs:
            if pair not in seen_pairs:
                seen_pairs.append(pair)
        pool.remove(question)
    return chosen


class TestCompose:
    def test_greedy_hand_trace(self):
        # Q1 covers {p1,p2,p3}, Q2 {p3,p4}, Q3 {p1,p2}: after Q1 (score 3)
        # only Q2 adds anything (p4); Q3's score collapses to 0.
        story = grid_story(4, 1)
        q1 = make_dq(story, "Q1?", [[("s0.com", 0), ("s1.com", 0), ("s2.com", 0)]])
        q2 = make_dq(story, "Q2?", [[("s2.com", 0), ("s3.com", 0)]])
        q3 = make_dq(story, "Q3?", [[("s0.com", 0), ("s1.com", 0)]])
        view = compose_recomposed(story, make_dqset(story, [q1, q2, q3]))
        assert [u.question_text for u in view.units] == ["Q1?", "Q2?"]

    def test_identical_paragraph_sets_emit_one_unit(self):
        story = grid_story(3, 2)
        pairs = [[("s0.com", 0), ("s1.com", 0), ("s2.com", 0)]]
        questions = [make_dq(story, f"Q{i}?", pairs) for i in range(4)]
        view = compose_recomposed(story, make_dqset(story, questions))
        assert len(view.units) == 1

    def test_selection_scores_non_increasing(self):
        rng = random.Random(11)
        story = grid_story(6, 12)
        for _ in range(50):
            questions = []
            for qi in range(rng.randint(1, 8)):
                pairs = set()
                for _ in range(rng.randint(1, 10)):
                    pairs.add((f"s{rng.randrange(6)}.com", rng.randrange(12)))
                questions.append(make_dq(story, f"Q{qi}?", [[p] for p in sorted(pairs)]))
            sequence = select_question_sequence(tuple(questions))
            scores = [score for _, score in sequence]
            assert scores == sorted(scores, reverse=True)

    def test_greedy_matches_exhaustive_reference(self):
        rng = random.Random(23)
        story = grid_story(4, 12)
        for _ in range(200):
            questions = []
            for qi in range(rng.randint(1, 8)):
                pairs = set()
                for _ in range(rng.randint(1, 12)):
                    pairs.add((f"s{rng.randrange(4)}.com", rng.randrange(12)))
                questions.append(make_dq(story, f"Q{qi}?", [[p] for p in sorted(pairs)]))
            sequence = select_question_sequence(tuple(questions))
            got = [(q.question.text, score) for q, score in sequence]
            assert got == reference_greedy_trace(questions)

    def test_primary_answers_come_from_two_largest_groups_distinct_sources(self):
        story = grid_story(5, 3)
        question = make_dq(
            story,
            "Q?",
            [
                [("s0.com", 0), ("s1.com", 0), ("s2.com", 0)],
                [("s3.com", 1), ("s4.com", 1)],
            ],
        )
        view = compose_recomposed(story, make_dqset(story, [question]))
        unit = view.units[0]
        assert [a.source_domain for a in unit.primary_answers] == ["s0.com", "s3.com"]
        assert len(unit.carousel_answers) == 3

    def test_primary_advances_when_top_groups_share_source(self):
        story = grid_story(4, 4)
        question = make_dq(
            story,
            "Q?",
            [
                [("s0.com", 0), ("s1.com", 0)],
                [("s0.com", 1), ("s2.com", 1)],
                [("s3.com", 2)],
            ],
        )
        view = compose_recomposed(story, make_dqset(story, [question]))
        unit = view.units[0]
        assert [a.source_domain for a in unit.primary_answers] == ["s0.com", "s3.com"]

    def test_single_group_single_source_gives_one_primary(self):
        story = grid_story(2, 2)
        question = make_dq(story, "Q?", [[("s0.com", 0), ("s0.com", 1)]])
        view = compose_recomposed(story, make_dqset(story, [question]))
        assert len(view.units[0].primary_answers) == 1

    def test_bold_range_lies_within_paragraph(self):
        story = grid_story(3, 3)
        question = make_dq(story, "Q?", [[("s0.com", 0), ("s1.com", 1)]])
        view = compose_recomposed(story, make_dqset(story, [question]))
        for answer in view.units[0].primary_answers:
            start, end = answer.bold_char_range
            assert 0 <= start < end <= len(answer.paragraph_text)

    def test_byline_lists_only_used_sources_in_story_order(self):
        story = grid_story(4, 2)
        question = make_dq(story, "Q?", [[("s2.com", 0), ("s0.com", 0)]])
        view = compose_recomposed(story, make_dqset(story, [question]))
        assert view.byline_sources == ("s0.com", "s2.com")

    def test_empty_question_set_raises(self):
        story = grid_story(2, 2)
        with pytest.raises(EmptyQuestionSet):
            compose_recomposed(story, make_dqset(story, []))

    def test_carousel_ordered_by_group_size_then_story_order(self):
        story = grid_story(6, 2)
        question = make_dq(
            story,
            "Q?",
            [
                [("s5.com", 0), ("s3.com", 0), ("s1.com", 0)],
                [("s4.com", 1), ("s0.com", 1)],
            ],
        )
        view = compose_recomposed(story, make_dqset(story, [question]))
        carousel = [a.source_domain for a in view.units[0].carousel_answers]
        # Primary took s5 (rep of biggest) and s4 (rep of second); leftovers
        # sort by group size desc then story order.
        assert carousel == ["s1.com", "s3.com", "s0.com"]


class TestGrid:
    def test_rows_sorted_by_answer_count(self):
        story = grid_story(12, 2)
        questions = [
            make_dq(story, "Qa?", [[(f"s{i}.com", 0) for i in range(7)]]),
            make_dq(story, "Qb?", [[(f"s{i}.com", 0) for i in range(12)]]),
            make_dq(story, "Qc?", [[(f"s{i}.com", 1) for i in range(9)]]),
        ]
        view = build_grid(story, make_dqset(story, questions))
        assert [count for _, count in view.row_questions] == [12, 9, 7]

    def test_same_group_cells_share_style_index(self):
        story = grid_story(4, 2)
        question = make_dq(
            story,
            "Q?",
            [[("s0.com", 0), ("s1.com", 0)], [("s2.com", 1), ("s3.com", 1)]],
        )
        view = build_grid(story, make_dqset(story, [question]))
        styles = {}
        for (row, col), cell in view.cells.items():
            styles.setdefault(cell.group_id, set()).add(cell.style_index)
        assert all(len(s) == 1 for s in styles.values())
        assert styles[0] == {0} and styles[1] == {1}

    def test_zero_answer_source_lands_rightmost_with_no_cells(self):
        story = grid_story(4, 2)
        question = make_dq(story, "Q?", [[("s0.com", 0), ("s1.com", 0), ("s3.com", 0)]])
        view = build_grid(story, make_dqset(story, [question]))
        assert view.col_sources[-1] == ("s2.com", 0)
        last_col = len(view.col_sources) - 1
        assert not any(col == last_col for _, col in view.cells)

    def test_monotone_rows_and_columns(self):
        rng = random.Random(5)
        for _ in range(50):
            n_sources = rng.randint(2, 8)
            story = grid_story(n_sources, 4)
            questions = []
            for qi in range(rng.randint(1, 8)):
                sources = rng.sample(range(n_sources), rng.randint(1, n_sources))
                questions.append(
                    make_dq(story, f"Q{qi}?", [[(f"s{i}.com", rng.randrange(4))] for i in sources])
                )
            view = build_grid(story, make_dqset(story, questions))
            row_counts = [count for _, count in view.row_questions]
            col_counts = [count for _, count in view.col_sources]
            assert row_counts == sorted(row_counts, reverse=True)
            assert col_counts == sorted(col_counts, reverse=True)

    def test_cell_exists_iff_source_answers(self):
        story = grid_story(3, 2)
        question = make_dq(story, "Q?", [[("s0.com", 0), ("s2.com", 1)]])
        view = build_grid(story, make_dqset(story, [question]))
        answering = {view.col_sources[col][0] for (_, col) in view.cells}
        assert answering == {"s0.com", "s2.com"}

    def test_hover_cell_carries_exact_span_text(self):
        story = grid_story(3, 2)
        question = make_dq(story, "Q?", [[("s0.com", 1), ("s1.com", 0)]])
        view = build_grid(story, make_dqset(story, [question]))
        for (row, col), cell in view.cells.items():
            source = view.col_sources[col][0]
            assert cell.span_text in story.article_for(source).paragraphs

    def test_style_index_wraps_palette(self):
        story = grid_story(10, 10)
        question = make_dq(
            story, "Q?", [[(f"s{i}.com", j)] for i in range(10) for j in range(1)]
        )
        view = build_grid(story, make_dqset(story, [question]))
        assert {cell.style_index for cell in view.cells.values()} <= set(range(8))

    def test_empty_question_set_raises(self):
        story = grid_story(2, 2)
        with pytest.raises(EmptyQuestionSet):
            build_grid(story, make_dqset(story, []))


class TestViewUrls:
    def test_every_view_url_resolves_to_a_story_source(self):
        from newsassembly.assembly import ALL_KINDS, build_view_payload

        rng = random.Random(33)
        story = grid_story(5, 4)
        known = {a.url for a in story.articles}
        questions = []
        for qi in range(4):
            sources = rng.sample(range(5), rng.randint(2, 5))
            questions.append(
                make_dq(story, f"Q{qi}?", [[(f"s{i}.com", rng.randrange(4))] for i in sources])
            )
        dqset = make_dqset(story, questions)
        for kind in ALL_KINDS:
            payload = build_view_payload(kind, story, dqset)
            for url in _collect_urls(payload):
                assert url in known


def _collect_urls(node):
    if isinstance(node, dict):
        for key, value in node.items():
            if key == "url":
                yield value
            else:
                yield from _collect_urls(value)
    elif isinstance(node, list):
        for item in node:
            yield from _collect_urls(item)
