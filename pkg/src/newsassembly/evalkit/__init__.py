"""Reading-exercise metrics, significance tests, and bootstrap analyses."""

from .metrics import (
    InterfaceMetrics,
    aggregate,
    aggregate_group,
    bucket,
    prediction_breakdown,
    score,
    scores_by_interface,
)
from .models import (
    ExerciseResponse,
    load_aspect_catalogs,
    load_responses,
    response_from_dict,
    response_to_dict,
    save_responses,
    validate_against_catalogs,
)
from .report import build_report, breakdown_table, metrics_table, report_to_json, report_to_text
from .significance import (
    bootstrap_participants,
    bootstrap_stories,
    build_significance_report,
    default_sizes,
    pairwise_score_tests,
    pairwise_test,
)

__all__ = [
    "ExerciseResponse",
    "InterfaceMetrics",
    "aggregate",
    "aggregate_group",
    "bootstrap_participants",
    "bootstrap_stories",
    "breakdown_table",
    "bucket",
    "build_report",
    "build_significance_report",
    "default_sizes",
    "load_aspect_catalogs",
    "load_responses",
    "metrics_table",
    "pairwise_score_tests",
    "pairwise_test",
    "prediction_breakdown",
    "report_to_json",
    "report_to_text",
    "response_from_dict",
    "response_to_dict",
    "save_responses",
    "score",
    "scores_by_interface",
    "validate_against_catalogs",
]
