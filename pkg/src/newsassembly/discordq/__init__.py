"""Discord-question pipeline: pluggable stages plus qualification filters."""

from .answer import answer_question_baseline
from .consolidate import consolidate
from .dedupe import deduplicate, pair_overlap
from .generate import generate_questions_baseline
from .pipeline import StageAdapters, run_pipeline
from .qualify import QualificationVerdict, foreign_answer_rate, qualify
from .types import (
    AnswerGroup,
    AnswerSpan,
    CandidateQuestion,
    DiscordQuestion,
    DiscordQuestionSet,
    PipelineConfig,
    dqset_from_dict,
    dqset_to_dict,
    load_dqset,
    save_dqset,
)

__all__ = [
    "AnswerGroup",
    "AnswerSpan",
    "CandidateQuestion",
    "DiscordQuestion",
    "DiscordQuestionSet",
    "PipelineConfig",
    "QualificationVerdict",
    "StageAdapters",
    "answer_question_baseline",
    "consolidate",
    "deduplicate",
    "dqset_from_dict",
    "dqset_to_dict",
    "foreign_answer_rate",
    "generate_questions_baseline",
    "load_dqset",
    "pair_overlap",
    "qualify",
    "run_pipeline",
    "save_dqset",
]
