#!/usr/bin/env python3
"""Regenerate the committed fixtures under fixtures/.

Deterministic: fixed seeds, fixed archetype assignments. Run from the repo
root after changing the synthetic-story generator:

    python3 scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from helpers import make_cohort, synthetic_story  # noqa: E402

from newsassembly.corpus import save_story  # noqa: E402
from newsassembly.evalkit import save_responses  # noqa: E402

STORIES = (
    # (story_id, title, seed, sources, archetype pool indices)
    ("city-taxes", "City tax increase", 101, 10, [0, 1, 2]),
    ("transit-fares", "Transit fare overhaul", 102, 11, [3, 4, 5, 9]),
    ("energy-permits", "Energy permit dispute", 103, 12, [6, 7, 8]),
)

QUESTIONS = {
    "city-taxes": [
        "What changed for city residents?",
        "Who pushed for the decision?",
        "Why was the decision controversial?",
        "What happens next for the budget?",
    ],
    "transit-fares": [
        "What was decided about fares?",
        "Who is affected by the overhaul?",
        "Why did officials act now?",
        "What alternatives were discussed?",
    ],
    "energy-permits": [
        "What is the permit dispute about?",
        "Who are the main parties involved?",
        "Why did the dispute escalate?",
        "What outcomes are expected?",
    ],
}


def main() -> None:
    corpus_dir = ROOT / "fixtures" / "corpus"
    questions_dir = ROOT / "fixtures" / "questions"
    aspects_dir = ROOT / "fixtures" / "aspects"
    for directory in (corpus_dir, questions_dir, aspects_dir):
        directory.mkdir(parents=True, exist_ok=True)

    for story_id, title, seed, sources, archetypes in STORIES:
        story = synthetic_story(
            random.Random(seed),
            sources,
            story_id=story_id,
            title=title,
            archetype_indices=archetypes,
            extra_partial=(story_id == "transit-fares"),
        )
        save_story(story, corpus_dir / f"{story_id}.json")
        (questions_dir / f"{story_id}.json").write_text(
            json.dumps(
                {"story_id": story_id, "questions": QUESTIONS[story_id]},
                ensure_ascii=False,
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
        print(f"{story_id}: {len(story.articles)} articles")

    # Rendered view payloads: real backend output the frontend tests validate
    # their types against.
    from click.testing import CliRunner

    from newsassembly.cli import main as cli_main

    views_dir = ROOT / "fixtures" / "views"
    dq_dir = ROOT / "fixtures" / "dqsets"
    runner = CliRunner()
    for args in (
        ["process", "--corpus", str(corpus_dir), "--reference", str(corpus_dir),
         "--out", str(dq_dir), "--workers", "1"],
        ["render", "--corpus", str(corpus_dir), "--dqset", str(dq_dir),
         "--kind", "all", "--format", "json", "--out", str(views_dir)],
    ):
        result = runner.invoke(cli_main, args)
        if result.exit_code != 0:
            raise SystemExit(result.output)
    print("dqsets and view payloads written")

    responses = make_cohort(participants=24, stories=3, seed=20, with_categories=True)
    save_responses(responses, ROOT / "fixtures" / "responses_sample.json")
    print(f"responses_sample.json: {len(responses)} rows")

    for story_index in range(3):
        story_id = f"story-{story_index}"
        catalog = {
            "story_id": story_id,
            "questions": [
                {
                    "question_index": q,
                    "aspects": [
                        {"aspect_id": a, "description": f"aspect {a} of question {q}"}
                        for a in range(8)
                    ],
                }
                for q in range(4)
            ],
        }
        (aspects_dir / f"{story_id}.json").write_text(
            json.dumps(catalog, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
    print("aspect catalogs written")


if __name__ == "__main__":
    main()
