from __future__ import annotations

from hypothesis import given, strategies as st

from newsassembly.discordq import AnswerSpan, PipelineConfig, consolidate

CONFIG = PipelineConfig()


def span(source: str, text: str, paragraph: int = 0) -> AnswerSpan:
    return AnswerSpan(
        source_domain=source,
        paragraph_index=paragraph,
        char_start=0,
        char_end=len(text),
        span_text=text,
    )


class TestConsolidate:
    def test_empty_input(self):
        assert consolidate([], CONFIG) == []

    def test_identical_spans_group_together(self):
        groups = consolidate([span("a.com", "rates will rise"), span("b.com", "rates will rise")], CONFIG)
        assert len(groups) == 1
        assert len(groups[0].members) == 2

    def test_disjoint_vocabulary_stays_apart(self):
        groups = consolidate([span("a.com", "rates will rise"), span("b.com", "farmers planted corn")], CONFIG)
        assert len(groups) == 2
        assert all(len(g.members) == 1 for g in groups)

    def test_half_overlap_links_at_default_threshold(self):
        # Token Jaccard of these two spans is 2/4 = 0.5 >= 0.4.
        groups = consolidate([span("a.com", "rates will rise"), span("b.com", "rates rise soon")], CONFIG)
        assert len(groups) == 1

    def test_single_link_chains_transitively(self):
        spans = [
            span("a.com", "rates will rise"),
            span("b.com", "rates rise soon"),
            span("c.com", "soon rise homes rates"),
        ]
        # a-b link (0.5) and b-c link (0.6); a-c alone would be 3/6 = 0.5 too,
        # but single link would chain them regardless.
        groups = consolidate(spans, CONFIG)
        assert len(groups) == 1
        assert len(groups[0].members) == 3

    def test_groups_ordered_by_size_then_first_member(self):
        spans = [
            span("a.com", "wholly unrelated words"),
            span("b.com", "rates will rise"),
            span("c.com", "rates will rise"),
        ]
        groups = consolidate(spans, CONFIG)
        assert [len(g.members) for g in groups] == [2, 1]
        assert groups[0].members[0].source_domain == "b.com"
        assert groups[1].members[0].source_domain == "a.com"

    def test_label_is_first_member_text(self):
        spans = [span("b.com", "rates will rise"), span("c.com", "rates rise soon")]
        groups = consolidate(spans, CONFIG)
        assert groups[0].label == "rates will rise"

    def test_group_ids_sequential_and_unique(self):
        spans = [span(f"s{i}.com", f"unique vocabulary number{i} token{i}") for i in range(4)]
        groups = consolidate(spans, CONFIG)
        assert [g.group_id for g in groups] == [0, 1, 2, 3]

    @given(
        st.lists(
            st.text(alphabet="abcdefg ", min_size=1, max_size=12).filter(str.strip),
            min_size=1,
            max_size=12,
        )
    )
    def test_partition_property(self, texts):
        spans = [span(f"s{i}.com", text, paragraph=i) for i, text in enumerate(texts)]
        groups = consolidate(spans, CONFIG)
        flattened = [m for g in groups for m in g.members]
        assert sorted(flattened, key=lambda s: s.source_domain) == sorted(
            spans, key=lambda s: s.source_domain
        )
