"""Self-contained static HTML pages for offline inspection of view payloads."""

from __future__ import annotations

from html import escape

from .views import ANNOTATED, ARTICLE, GRID, HEADLINES, PALETTE_SIZE, RECOMPOSED

_PALETTE = (
    "#3b6fb5", "#c24d3a", "#8a8a8a", "#4f9d69",
    "#b58f3b", "#7a4fb5", "#3ba9b5", "#b53b86",
)
_SHAPES = ("■", "●", "▲", "◆", "▼", "⬟", "✚", "★")

_CSS = """
body { font-family: Georgia, serif; max-width: 46rem; margin: 2rem auto; line-height: 1.5; }
h1 { font-size: 1.5rem; }
.byline { color: #666; font-style: italic; margin-bottom: 1.2rem; }
details.annotation { border: 1px solid #b9c6dd; background: #f3f6fb; border-radius: 6px;
  padding: .4rem .8rem; margin: .6rem 0; }
details.annotation summary { cursor: pointer; font-weight: bold; }
.answer { margin: .3rem 0 .3rem 1rem; }
.answer a { color: #2a5db0; text-decoration: none; }
.unit { border: 1px solid #ddd; border-radius: 6px; padding: .6rem .9rem; margin: .8rem 0; }
.unit h2 { font-size: 1.1rem; margin: .2rem 0 .6rem; }
.carousel { overflow-x: auto; white-space: nowrap; padding: .4rem 0; }
.carousel .answer { display: inline-block; white-space: normal; width: 18rem;
  vertical-align: top; margin-right: .8rem; border-left: 3px solid #ddd; padding-left: .5rem; }
table.grid { border-collapse: collapse; font-family: Helvetica, sans-serif; font-size: .8rem; }
table.grid th, table.grid td { border: 1px solid #eee; padding: .25rem .45rem; text-align: center; }
table.grid th.q { text-align: left; max-width: 22rem; }
ul.headlines { list-style: none; padding: 0; }
ul.headlines li { margin: .5rem 0; }
"""


def _page(title: str, body: str) -> str:
    return (
        "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">"
        f"<title>{escape(title)}</title><style>{_CSS}</style></head>\n"
        f"<body>\n{body}\n</body></html>\n"
    )


def _render_article(payload: dict) -> str:
    parts = [f"<h1>{escape(payload['headline'])}</h1>"]
    parts.append(f"<div class=\"byline\">{escape(payload['byline'])}</div>")
    for block in payload["blocks"]:
        if block["type"] == "paragraph":
            parts.append(f"<p>{escape(block['text'])}</p>")
        else:
            answers = "".join(
                "<div class=\"answer\">"
                f"{escape(a['span_text'])} &mdash; "
                f"<a href=\"{escape(a['url'])}\">{escape(a['source_domain'])}</a></div>"
                for a in block["answers"]
            )
            parts.append(
                "<details class=\"annotation\">"
                f"<summary>{escape(block['question_text'])}</summary>{answers}</details>"
            )
    return "\n".join(parts)


def _bolded(answer: dict) -> str:
    text = answer["paragraph_text"]
    start, end = answer["bold_char_range"]
    return (
        f"{escape(text[:start])}<b>{escape(text[start:end])}</b>{escape(text[end:])} "
        f"<a href=\"{escape(answer['url'])}\">{escape(answer['source_domain'])}</a>"
    )


def _render_recomposed(payload: dict) -> str:
    parts = [f"<h1>{escape(payload['story_title'])}</h1>"]
    parts.append(
        "<div class=\"byline\">Sources: "
        + escape(", ".join(payload["byline_sources"]))
        + "</div>"
    )
    parts.append(f"<p>{escape(payload['intro_summary'])}</p>")
    for unit in payload["units"]:
        primary = "".join(f"<div class=\"answer\">{_bolded(a)}</div>" for a in unit["primary_answers"])
        carousel = ""
        if unit["carousel_answers"]:
            carousel = (
                "<div class=\"carousel\">"
                + "".join(f"<div class=\"answer\">{_bolded(a)}</div>" for a in unit["carousel_answers"])
                + "</div>"
            )
        parts.append(
            f"<div class=\"unit\"><h2>{escape(unit['question_text'])}</h2>{primary}{carousel}</div>"
        )
    return "\n".join(parts)


def _render_grid(payload: dict) -> str:
    cells = {(c["row"], c["col"]): c for c in payload["cells"]}
    header = "<tr><th></th>" + "".join(
        f"<th>{escape(c['source_domain'])}<br>({c['questions_answered']})</th>"
        for c in payload["col_sources"]
    ) + "</tr>"
    rows = []
    for r, row in enumerate(payload["row_questions"]):
        tds = []
        for c in range(len(payload["col_sources"])):
            cell = cells.get((r, c))
            if cell is None:
                tds.append("<td></td>")
            else:
                color = _PALETTE[cell["style_index"] % PALETTE_SIZE]
                shape = _SHAPES[cell["style_index"] % PALETTE_SIZE]
                tds.append(
                    f"<td><a href=\"{escape(cell['url'])}\" title=\"{escape(cell['span_text'])}\" "
                    f"style=\"color:{color};text-decoration:none\">{shape}</a></td>"
                )
        rows.append(
            f"<tr><th class=\"q\">{escape(row['question_text'])} ({row['answer_count']})</th>"
            + "".join(tds)
            + "</tr>"
        )
    return "<table class=\"grid\">" + header + "".join(rows) + "</table>"


def _render_headlines(payload: dict) -> str:
    items = "".join(
        f"<li><a href=\"{escape(e['url'])}\">{escape(e['headline'])}</a>"
        f" <span class=\"byline\">({escape(e['source_domain'])})</span></li>"
        for e in payload["entries"]
    )
    return f"<ul class=\"headlines\">{items}</ul>"


def render_html(kind: str, payload: dict, title: str = "") -> str:
    """One self-contained page for a view payload."""
    if kind in (ANNOTATED, ARTICLE):
        body = _render_article(payload)
        title = title or payload["headline"]
    elif kind == RECOMPOSED:
        body = _render_recomposed(payload)
        title = title or payload["story_title"]
    elif kind == GRID:
        body = _render_grid(payload)
        title = title or "Question grid"
    elif kind == HEADLINES:
        body = _render_headlines(payload)
        title = title or "Headlines"
    else:
        raise ValueError(f"unknown view kind {kind!r}")
    return _page(title, body)
