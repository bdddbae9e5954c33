from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from newsassembly.corpus import (
    extract_article,
    load_story,
    median_article,
    paragraph_split,
    registrable_domain,
    save_story,
    story_from_dict,
    story_to_dict,
)
from newsassembly.errors import MalformedDocument, NoFullArticle, SchemaError

from helpers import make_article, make_story


FULL_PAGE = """
<html><head>
<title>Rates Rise Again</title>
<meta name="description" content="The central bank moves once more.">
</head><body>
<nav><p>Home</p><p>Politics</p></nav>
<article>
<p>First paragraph of the body.</p>
<p>Second paragraph, a bit longer than the first.</p>
<p>Third paragraph.</p>
<p>Fourth paragraph here.</p>
<p>Fifth and final paragraph.</p>
</article>
<footer><p>Contact us</p></footer>
</body></html>
"""


class TestExtractArticle:
    def test_full_page_maps_fields(self):
        article = extract_article(FULL_PAGE, "https://www.example.com/story")
        assert article.headline == "Rates Rise Again"
        assert article.summary == "The central bank moves once more."
        assert len(article.paragraphs) == 5
        assert article.paragraphs[0] == "First paragraph of the body."
        assert article.is_partial is False
        assert article.source_domain == "example.com"

    def test_nav_and_footer_paragraphs_skipped(self):
        article = extract_article(FULL_PAGE, "https://example.com/story")
        assert "Home" not in article.paragraphs
        assert "Contact us" not in article.paragraphs

    def test_missing_description_leaves_summary_absent(self):
        page = "<html><head><title>Bare</title></head><body><p>Body text.</p></body></html>"
        article = extract_article(page, "https://example.com/x")
        assert article.summary is None

    def test_paywalled_headline_only_page_is_partial(self):
        page = "<html><head><title>Locked Story</title></head><body></body></html>"
        article = extract_article(page, "https://paywall.com/x")
        assert article.is_partial is True
        assert article.paragraphs == ()
        assert article.headline == "Locked Story"

    def test_no_headline_raises(self):
        with pytest.raises(MalformedDocument):
            extract_article("<html><body><p>text</p></body></html>", "https://x.com/y")

    def test_round_trips_through_story_file(self, tmp_path):
        article = extract_article(FULL_PAGE, "https://example.com/story")
        story = make_story([article])
        path = tmp_path / "story.json"
        save_story(story, path)
        loaded = load_story(path)
        assert loaded.articles[0] == article


class TestRegistrableDomain:
    @pytest.mark.parametrize(
        "url,expected",
        [
            ("https://www.cnn.com/article", "cnn.com"),
            ("http://news.example.org/a/b?c=1", "news.example.org"),
            ("https://example.com:8080/x", "example.com"),
        ],
    )
    def test_examples(self, url, expected):
        assert registrable_domain(url) == expected


class TestParagraphSplit:
    def test_blank_line_delimiter(self):
        assert paragraph_split("A\n\nB\n\nC") == ["A", "B", "C"]

    def test_runs_of_blank_lines_collapse(self):
        assert paragraph_split("A\n\n\n\nB") == ["A", "B"]

    def test_empty_input(self):
        assert paragraph_split("") == []

    def test_whitespace_only_lines_are_blank(self):
        assert paragraph_split("A\n   \nB") == ["A", "B"]

    @given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=200))
    def test_never_emits_blank_line_or_empty_paragraph(self, body):
        for paragraph in paragraph_split(body):
            assert paragraph.strip() == paragraph
            assert paragraph
            assert "\n\n" not in paragraph


class TestLoadStory:
    def _raw(self):
        story = make_story(
            [make_article(f"s{i}.com", [f"Body text number {i}."]) for i in range(12)],
            story_id="twelve",
        )
        return story_to_dict(story)

    def test_valid_file_round_trips_in_order(self, tmp_path):
        raw = self._raw()
        path = tmp_path / "s.json"
        path.write_text(json.dumps(raw), encoding="utf-8")
        story = load_story(path)
        assert [a.source_domain for a in story.articles] == [f"s{i}.com" for i in range(12)]

    def test_duplicate_source_domain_rejected(self, tmp_path):
        raw = self._raw()
        raw["articles"][1]["source_domain"] = raw["articles"][0]["source_domain"]
        path = tmp_path / "s.json"
        path.write_text(json.dumps(raw), encoding="utf-8")
        with pytest.raises(SchemaError):
            load_story(path)

    def test_missing_headline_rejected(self, tmp_path):
        raw = self._raw()
        raw["articles"][0]["headline"] = ""
        path = tmp_path / "s.json"
        path.write_text(json.dumps(raw), encoding="utf-8")
        with pytest.raises(SchemaError):
            load_story(path)

    def test_partial_with_paragraphs_rejected(self):
        raw = self._raw()
        raw["articles"][0]["is_partial"] = True
        with pytest.raises(SchemaError):
            story_from_dict(raw)

    def test_word_count_is_derived(self):
        article = make_article("a.com", ["one two three", "four five"])
        assert article.word_count == 5


class TestMedianArticle:
    def _story_with_word_counts(self, counts):
        articles = [
            make_article(f"s{i}.com", [" ".join(["word"] * c)] if c else [])
            for i, c in enumerate(counts)
        ]
        return make_story(articles)

    def test_odd_count_median(self):
        story = self._story_with_word_counts([100, 200, 300])
        assert story.article_for(median_article(story)).word_count == 200

    def test_even_count_takes_lower_median(self):
        story = self._story_with_word_counts([100, 200, 300, 400])
        assert story.article_for(median_article(story)).word_count == 200

    def test_singleton(self):
        story = self._story_with_word_counts([42])
        assert median_article(story) == "s0.com"

    def test_unsorted_input(self):
        story = self._story_with_word_counts([300, 100, 200])
        assert story.article_for(median_article(story)).word_count == 200

    def test_tie_breaks_by_story_order(self):
        story = self._story_with_word_counts([200, 200, 100])
        # sorted: s2(100), s0(200), s1(200); median index (3-1)//2 = 1 -> s0
        assert median_article(story) == "s0.com"

    def test_all_partial_raises(self):
        story = make_story([make_article("a.com", is_partial=True)])
        with pytest.raises(NoFullArticle):
            median_article(story)

    @given(st.lists(st.integers(min_value=0, max_value=500), min_size=1, max_size=20))
    def test_median_rank_property(self, counts):
        story = self._story_with_word_counts(counts)
        chosen = story.article_for(median_article(story)).word_count
        n = len(counts)
        assert sum(1 for c in counts if chosen >= c) >= (n - 1) // 2 + 1
        assert sum(1 for c in counts if chosen <= c) >= n - (n - 1) // 2
