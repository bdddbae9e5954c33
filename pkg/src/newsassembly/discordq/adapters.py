"""External stage adapters: line-delimited JSON over a subprocess or HTTP.

One request line per stage call, one response line back. Record shapes are
the same as the question-set file format:

    generate     {"stage": "generate", "article": {...}}
                 -> {"questions": [{"question_id", "text", ...}, ...]}
    answer       {"stage": "answer", "question": {...}, "article": {...}}
                 -> {"span": {...} | null}
    consolidate  {"stage": "consolidate", "answers": [{...}, ...]}
                 -> {"groups": [{"group_id", "label", "members": [...]}, ...]}
"""

from __future__ import annotations

import json
import subprocess
from typing import Sequence

from ..corpus import SourceArticle, article_to_dict
from ..errors import SchemaError, StageFailure
from .pipeline import StageAdapters
from .types import (
    AnswerGroup,
    AnswerSpan,
    CandidateQuestion,
    group_from_dict,
    question_from_dict,
    question_to_dict,
    span_from_dict,
    span_to_dict,
)


class SubprocessStage:
    """One long-running worker process spoken to over stdin/stdout lines."""

    def __init__(self, command: Sequence[str], stage: str) -> None:
        self.stage = stage
        self._proc = subprocess.Popen(
            list(command),
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            bufsize=1,
        )

    def call(self, request: dict) -> dict:
        line = json.dumps(request, ensure_ascii=False)
        try:
            assert self._proc.stdin is not None and self._proc.stdout is not None
            self._proc.stdin.write(line + "\n")
            self._proc.stdin.flush()
            response = self._proc.stdout.readline()
        except (BrokenPipeError, OSError) as exc:
            raise StageFailure(self.stage, f"worker process failed: {exc}") from exc
        if not response:
            raise StageFailure(self.stage, "worker process closed its output")
        try:
            decoded = json.loads(response)
        except json.JSONDecodeError as exc:
            raise StageFailure(self.stage, f"invalid JSON from worker: {exc}") from exc
        if not isinstance(decoded, dict):
            raise StageFailure(self.stage, "worker response is not an object")
        return decoded

    def close(self) -> None:
        if self._proc.stdin:
            self._proc.stdin.close()
        self._proc.wait(timeout=10)

    def __enter__(self) -> SubprocessStage:
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


class HttpStage:
    """Stage endpoint reached by POSTing one JSON line and reading one back."""

    def __init__(self, url: str, stage: str) -> None:
        self.url = url
        self.stage = stage

    def call(self, request: dict) -> dict:
        import requests

        try:
            response = requests.post(
                self.url,
                data=json.dumps(request, ensure_ascii=False) + "\n",
                headers={"Content-Type": "application/x-ndjson"},
                timeout=60,
            )
            response.raise_for_status()
            decoded = json.loads(response.text.splitlines()[0])
        except Exception as exc:  # noqa: BLE001 - every transport fault is a stage failure
            raise StageFailure(self.stage, f"endpoint call failed: {exc}") from exc
        if not isinstance(decoded, dict):
            raise StageFailure(self.stage, "endpoint response is not an object")
        return decoded


def _generate_via(stage) -> "callable":
    def generate(article: SourceArticle) -> list[CandidateQuestion]:
        response = stage.call({"stage": "generate", "article": article_to_dict(article)})
        records = response.get("questions")
        if not isinstance(records, list):
            raise StageFailure("generate", "response lacks a 'questions' list")
        try:
            return [question_from_dict(r) for r in records]
        except SchemaError as exc:
            raise StageFailure("generate", str(exc)) from exc

    return generate


def _answer_via(stage) -> "callable":
    def answer(question: CandidateQuestion, article: SourceArticle) -> AnswerSpan | None:
        response = stage.call(
            {
                "stage": "answer",
                "question": question_to_dict(question),
                "article": article_to_dict(article),
            }
        )
        record = response.get("span")
        if record is None:
            return None
        try:
            return span_from_dict(record)
        except SchemaError as exc:
            raise StageFailure("answer", str(exc)) from exc

    return answer


def _consolidate_via(stage) -> "callable":
    def do_consolidate(answers: list[AnswerSpan]) -> list[AnswerGroup]:
        response = stage.call(
            {"stage": "consolidate", "answers": [span_to_dict(a) for a in answers]}
        )
        records = response.get("groups")
        if not isinstance(records, list):
            raise StageFailure("consolidate", "response lacks a 'groups' list")
        try:
            return [group_from_dict(r) for r in records]
        except SchemaError as exc:
            raise StageFailure("consolidate", str(exc)) from exc

    return do_consolidate


def adapters_from_stages(
    generate_stage=None, answer_stage=None, consolidate_stage=None
) -> StageAdapters:
    """Wrap transport-level stages (SubprocessStage/HttpStage) as StageAdapters."""
    return StageAdapters(
        generate=_generate_via(generate_stage) if generate_stage else None,
        answer=_answer_via(answer_stage) if answer_stage else None,
        consolidate=_consolidate_via(consolidate_stage) if consolidate_stage else None,
    )


__all__ = ["SubprocessStage", "HttpStage", "adapters_from_stages"]
