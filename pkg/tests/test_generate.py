from __future__ import annotations

from helpers import make_article

from newsassembly.discordq import generate_questions_baseline
from newsassembly.textutils import sentences


class TestTemplates:
    def test_causal_sentence_yields_why_question(self):
        # Hand application of the templates to this sentence: the clause before
        # "because" is "The Fed raised rates"; simple past fronts with "did".
        article = make_article("fed.com", ["The Fed raised rates because inflation peaked."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "Why did the Fed raise rates?" in texts

    def test_subject_template_uses_who_for_proper_nouns(self):
        article = make_article("fed.com", ["The Fed raised rates because inflation peaked."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "Who raised rates?" in texts

    def test_subject_template_uses_what_for_common_nouns(self):
        article = make_article("a.com", ["The mayor raised taxes quickly."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "What raised taxes quickly?" in texts

    def test_auxiliary_fronts_in_why_question(self):
        article = make_article("a.com", ["The council will cut spending because revenue dropped."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "Why will the council cut spending?" in texts

    def test_quantity_template(self):
        article = make_article("a.com", ["The plan costs 40 million dollars."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "How many dollars?" in texts

    def test_quantity_singular_head_uses_how_much(self):
        article = make_article("a.com", ["The loan totals 5 billion yen overall."])
        texts = [q.text for q in generate_questions_baseline(article)]
        assert "How much yen?" in texts


class TestContract:
    def test_zero_sentences_yields_empty(self):
        article = make_article("a.com", [])
        assert generate_questions_baseline(article) == []

    def test_partial_article_yields_empty(self):
        article = make_article("a.com", is_partial=True)
        assert generate_questions_baseline(article) == []

    def test_at_most_three_per_sentence(self):
        paragraphs = [
            "The Fed raised rates because inflation peaked.",
            "The plan costs 40 million dollars and was praised widely.",
            "Farmers protested the decision loudly.\n\nUnused line.",
        ]
        article = make_article("a.com", paragraphs)
        n_sentences = sum(len(sentences(p)) for p in paragraphs)
        assert len(generate_questions_baseline(article)) <= 3 * n_sentences

    def test_all_outputs_interrogative(self):
        article = make_article(
            "a.com",
            ["The Fed raised rates because inflation peaked. The plan costs 40 million dollars."],
        )
        for question in generate_questions_baseline(article):
            assert question.text.endswith("?")

    def test_deterministic(self):
        article = make_article("a.com", ["The Fed raised rates because inflation peaked."])
        first = generate_questions_baseline(article)
        second = generate_questions_baseline(article)
        assert first == second

    def test_origin_fields_point_at_source(self):
        article = make_article(
            "a.com", ["Nothing notable here at all.", "The Fed raised rates because inflation peaked."]
        )
        questions = generate_questions_baseline(article)
        why = [q for q in questions if q.text.startswith("Why")]
        assert why and why[0].origin_source == "a.com" and why[0].origin_paragraph == 1

    def test_question_ids_unique(self):
        article = make_article(
            "a.com",
            ["The Fed raised rates because inflation peaked. The plan costs 40 million dollars."],
        )
        ids = [q.question_id for q in generate_questions_baseline(article)]
        assert len(set(ids)) == len(ids)
