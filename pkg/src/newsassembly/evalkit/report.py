"""Evaluation report assembly: JSON plus plain-text tables."""

from __future__ import annotations

import json

from .metrics import InterfaceMetrics, aggregate, prediction_breakdown
from .models import ExerciseResponse
from .significance import build_significance_report

DISPLAY_NAMES = {
    "article": "News Article",
    "headlines": "Headline List",
    "annotated": "Annotated Article",
    "recomposed": "Recomposed Article",
    "grid": "Question Grid",
}

_TABLE1_COLUMNS = ("Score", "%No Ans", "%S0", "%S2+", "#Links", "%Any L", "#Words", "#Min")
_TABLE2_COLUMNS = ("%1-side", "%Hypo", "%2-Side")


def _display(kind: str) -> str:
    return DISPLAY_NAMES.get(kind, kind)


def metrics_table(metrics: dict[str, InterfaceMetrics]) -> str:
    """Fixed-width table with one row per interface."""
    header = ["Interface"] + list(_TABLE1_COLUMNS)
    rows = []
    for kind, m in metrics.items():
        rows.append(
            [
                _display(kind),
                f"{m.score_mean:.2f}",
                f"{m.pct_no_ans:.1f}",
                f"{m.pct_s0:.1f}",
                f"{m.pct_s2plus:.1f}",
                f"{m.links_mean:.1f}",
                f"{m.pct_any_link:.1f}",
                f"{m.words_mean:.0f}",
                f"{m.minutes_mean:.1f}",
            ]
        )
    return _format_table(header, rows)


def breakdown_table(breakdowns: dict[str, tuple[float, float, float]]) -> str:
    header = ["Interface"] + list(_TABLE2_COLUMNS)
    rows = [
        [_display(kind), f"{one:.1f}", f"{hypo:.1f}", f"{two:.1f}"]
        for kind, (one, hypo, two) in breakdowns.items()
    ]
    return _format_table(header, rows)


def _format_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i]) for i in range(len(header))]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)


def prediction_breakdowns_by_interface(
    responses: list[ExerciseResponse],
) -> dict[str, tuple[float, float, float]]:
    labeled: dict[str, list[str]] = {}
    for response in responses:
        if response.prediction_category is not None:
            labeled.setdefault(response.interface_kind, []).append(response.prediction_category)
    return {kind: prediction_breakdown(categories) for kind, categories in sorted(labeled.items())}


def build_report(
    responses: list[ExerciseResponse],
    seed: int,
    resamples: int = 40,
    alpha: float = 0.05,
    sizes: list[int] | None = None,
    with_replacement: bool = False,
) -> dict:
    """Everything the evaluate command emits, as a JSON-ready dict."""
    metrics = aggregate(responses)
    report = {
        "metrics": {kind: m.to_dict() for kind, m in metrics.items()},
        "significance": build_significance_report(
            responses, seed, resamples, alpha, sizes, with_replacement
        ),
    }
    breakdowns = prediction_breakdowns_by_interface(responses)
    if breakdowns:
        report["prediction_breakdown"] = {
            kind: {"one_sided": one, "hypothetical": hypo, "two_sided": two}
            for kind, (one, hypo, two) in breakdowns.items()
        }
    return report


def report_to_json(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def report_to_text(report: dict, responses: list[ExerciseResponse]) -> str:
    """Human-readable rendering: metric and breakdown tables plus p-values."""
    metrics = aggregate(responses)
    sections = ["Reading exercise metrics", "", metrics_table(metrics), ""]
    breakdowns = prediction_breakdowns_by_interface(responses)
    if breakdowns:
        sections += ["Prediction answer categories", "", breakdown_table(breakdowns), ""]
    sections.append("Pairwise Welch tests (two-tailed p)")
    for pair, p in sorted(report["significance"]["pairwise"].items()):
        sections.append(f"  {pair}: p={p:.6g}")
    return "\n".join(sections) + "\n"
