/** DOM renderers for the five views.
 *
 * Rendering is a pure function of (payload, state): the same inputs always
 * produce the same document structure. All interaction flows through the
 * handler callbacks, which feed new state to the next render.
 */

import type {
  AnnotationBlock,
  ArticlePayload,
  GridPayload,
  HeadlinesPayload,
  RecomposedPayload,
  UnitAnswer,
  ViewKind,
  ViewPayload,
} from "./types.js";
import { validatePayload } from "./validate.js";
import type { ViewState } from "./viewstate.js";

export interface ViewHandlers {
  onToggleAnnotation?: (questionId: string) => void;
  onStepCarousel?: (unitIndex: number, delta: number) => void;
  onHoverCell?: (cell: { row: number; col: number } | null) => void;
  onOpenLink?: (url: string) => void;
}

export const GRID_PALETTE = [
  "#3b6fb5",
  "#c24d3a",
  "#8a8a8a",
  "#4f9d69",
  "#b58f3b",
  "#7a4fb5",
  "#3ba9b5",
  "#b53b86",
];
export const GRID_SHAPES = ["■", "●", "▲", "◆", "▼", "⬟", "✚", "★"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function sourceLink(url: string, label: string, handlers: ViewHandlers): HTMLAnchorElement {
  const link = el("a", "source-link", label);
  link.href = url;
  link.target = "_blank";
  link.rel = "noopener";
  link.addEventListener("click", () => handlers.onOpenLink?.(url));
  return link;
}

export function errorPanel(field: string): HTMLElement {
  const panel = el("div", "error-panel");
  panel.append(el("strong", undefined, "View payload mismatch"));
  const detail = el("div", "error-field", `offending field: ${field}`);
  detail.dataset.field = field;
  panel.append(detail);
  return panel;
}

function renderAnnotation(
  block: AnnotationBlock,
  state: ViewState,
  handlers: ViewHandlers,
): HTMLElement {
  const box = el("div", "annotation");
  box.dataset.questionId = block.question_id;
  const expanded = state.expandedAnnotations.has(block.question_id);
  box.classList.add(expanded ? "expanded" : "collapsed");

  const header = el("button", "annotation-question", block.question_text);
  header.type = "button";
  header.setAttribute("aria-expanded", String(expanded));
  header.addEventListener("click", () => handlers.onToggleAnnotation?.(block.question_id));
  box.append(header);

  if (expanded) {
    const answers = el("div", "annotation-answers");
    for (const answer of block.answers) {
      const row = el("div", "annotation-answer");
      row.append(el("span", "answer-text", answer.span_text));
      row.append(document.createTextNode(" — "));
      row.append(sourceLink(answer.url, answer.source_domain, handlers));
      answers.append(row);
    }
    box.append(answers);
  }
  return box;
}

function renderArticle(
  payload: ArticlePayload,
  state: ViewState,
  handlers: ViewHandlers,
): HTMLElement {
  const root = el("article", "view view-article");
  root.append(el("h1", undefined, payload.headline));
  root.append(el("div", "byline", payload.byline));
  for (const block of payload.blocks) {
    if (block.type === "paragraph") {
      root.append(el("p", "paragraph", block.text));
    } else {
      root.append(renderAnnotation(block, state, handlers));
    }
  }
  return root;
}

function boldedParagraph(answer: UnitAnswer): HTMLElement {
  const [start, end] = answer.bold_char_range;
  const text = answer.paragraph_text;
  const paragraph = el("p", "unit-paragraph");
  paragraph.append(document.createTextNode(text.slice(0, start)));
  paragraph.append(el("b", undefined, text.slice(start, end)));
  paragraph.append(document.createTextNode(text.slice(end)));
  return paragraph;
}

function renderRecomposed(
  payload: RecomposedPayload,
  state: ViewState,
  handlers: ViewHandlers,
): HTMLElement {
  const root = el("article", "view view-recomposed");
  root.append(el("h1", undefined, payload.story_title));
  root.append(el("div", "byline", `Sources: ${payload.byline_sources.join(", ")}`));
  root.append(el("p", "intro-summary", payload.intro_summary));

  payload.units.forEach((unit, index) => {
    const box = el("section", "question-unit");
    box.append(el("h2", "unit-question", unit.question_text));
    for (const answer of unit.primary_answers) {
      const entry = el("div", "primary-answer");
      entry.append(boldedParagraph(answer));
      entry.append(sourceLink(answer.url, answer.source_domain, handlers));
      box.append(entry);
    }
    if (unit.carousel_answers.length > 0) {
      const position = Math.min(
        state.carouselPositions.get(index) ?? 0,
        unit.carousel_answers.length - 1,
      );
      const carousel = el("div", "carousel");
      const prev = el("button", "carousel-prev", "‹");
      prev.type = "button";
      prev.disabled = position === 0;
      prev.addEventListener("click", () => handlers.onStepCarousel?.(index, -1));
      const next = el("button", "carousel-next", "›");
      next.type = "button";
      next.disabled = position === unit.carousel_answers.length - 1;
      next.addEventListener("click", () => handlers.onStepCarousel?.(index, 1));

      const current = unit.carousel_answers[position];
      const slide = el("div", "carousel-slide");
      slide.dataset.position = String(position);
      slide.append(boldedParagraph(current));
      slide.append(sourceLink(current.url, current.source_domain, handlers));

      carousel.append(prev, slide, next);
      carousel.append(
        el("span", "carousel-count", `${position + 1}/${unit.carousel_answers.length}`),
      );
      box.append(carousel);
    }
    root.append(box);
  });
  return root;
}

function renderGrid(payload: GridPayload, state: ViewState, handlers: ViewHandlers): HTMLElement {
  const byPosition = new Map(payload.cells.map((c) => [`${c.row}:${c.col}`, c]));
  const root = el("div", "view view-grid");
  const table = el("table", "grid-table");

  const head = el("tr");
  head.append(el("th"));
  for (const col of payload.col_sources) {
    const th = el("th", "grid-col", col.source_domain);
    th.append(el("span", "col-count", ` (${col.questions_answered})`));
    head.append(th);
  }
  table.append(head);

  payload.row_questions.forEach((row, rowIndex) => {
    const tr = el("tr");
    const label = el("th", "grid-row", row.question_text);
    label.append(el("span", "row-count", ` (${row.answer_count})`));
    tr.append(label);
    payload.col_sources.forEach((_, colIndex) => {
      const td = el("td", "grid-cell");
      td.dataset.row = String(rowIndex);
      td.dataset.col = String(colIndex);
      const cell = byPosition.get(`${rowIndex}:${colIndex}`);
      if (cell) {
        const shape = el("span", "cell-shape", GRID_SHAPES[cell.style_index % GRID_SHAPES.length]);
        shape.style.color = GRID_PALETTE[cell.style_index % GRID_PALETTE.length];
        td.append(shape);
        td.addEventListener("mouseenter", () =>
          handlers.onHoverCell?.({ row: rowIndex, col: colIndex }),
        );
        td.addEventListener("mouseleave", () => handlers.onHoverCell?.(null));
      }
      tr.append(td);
    });
    table.append(tr);
  });
  root.append(table);

  if (state.hoveredCell) {
    const cell = byPosition.get(`${state.hoveredCell.row}:${state.hoveredCell.col}`);
    if (cell) {
      const panel = el("div", "grid-hover");
      panel.append(el("div", "hover-span", cell.span_text));
      panel.append(sourceLink(cell.url, "open source", handlers));
      root.append(panel);
    }
  }
  return root;
}

function renderHeadlines(payload: HeadlinesPayload, handlers: ViewHandlers): HTMLElement {
  const root = el("div", "view view-headlines");
  const list = el("ul", "headline-list");
  for (const entry of payload.entries) {
    const item = el("li", "headline-entry");
    item.append(sourceLink(entry.url, entry.headline, handlers));
    item.append(el("span", "headline-source", ` (${entry.source_domain})`));
    list.append(item);
  }
  root.append(list);
  return root;
}

export function renderView(
  kind: ViewKind,
  payload: ViewPayload,
  state: ViewState,
  handlers: ViewHandlers = {},
): HTMLElement {
  const offending = validatePayload(kind, payload);
  if (offending !== null) return errorPanel(offending);
  switch (kind) {
    case "annotated":
    case "article":
      return renderArticle(payload as ArticlePayload, state, handlers);
    case "recomposed":
      return renderRecomposed(payload as RecomposedPayload, state, handlers);
    case "grid":
      return renderGrid(payload as GridPayload, state, handlers);
    case "headlines":
      return renderHeadlines(payload as HeadlinesPayload, handlers);
  }
}
