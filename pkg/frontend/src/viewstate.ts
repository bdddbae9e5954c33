/** Interaction state for a mounted view; payload data is never mutated. */

import type { ArticlePayload, GridPayload, RecomposedPayload, ViewKind } from "./types.js";

export interface ViewState {
  storyId: string;
  kind: ViewKind;
  expandedAnnotations: ReadonlySet<string>;
  carouselPositions: ReadonlyMap<number, number>;
  hoveredCell: { row: number; col: number } | null;
}

export function createViewState(storyId: string, kind: ViewKind): ViewState {
  return {
    storyId,
    kind,
    expandedAnnotations: new Set(),
    carouselPositions: new Map(),
    hoveredCell: null,
  };
}

export function annotationIds(payload: ArticlePayload): Set<string> {
  const ids = new Set<string>();
  for (const block of payload.blocks) {
    if (block.type === "annotation") ids.add(block.question_id);
  }
  return ids;
}

/** Expand or collapse one annotation; unknown ids leave the state unchanged. */
export function toggleAnnotation(
  state: ViewState,
  payload: ArticlePayload,
  questionId: string,
): ViewState {
  if (!annotationIds(payload).has(questionId)) return state;
  const expanded = new Set(state.expandedAnnotations);
  if (expanded.has(questionId)) {
    expanded.delete(questionId);
  } else {
    expanded.add(questionId);
  }
  return { ...state, expandedAnnotations: expanded };
}

/** Move a unit's carousel; the position clamps to the carousel contents. */
export function stepCarousel(
  state: ViewState,
  payload: RecomposedPayload,
  unitIndex: number,
  delta: number,
): ViewState {
  const unit = payload.units[unitIndex];
  if (!unit || unit.carousel_answers.length === 0) return state;
  const current = state.carouselPositions.get(unitIndex) ?? 0;
  const next = Math.min(unit.carousel_answers.length - 1, Math.max(0, current + delta));
  if (next === current) return state;
  const positions = new Map(state.carouselPositions);
  positions.set(unitIndex, next);
  return { ...state, carouselPositions: positions };
}

/** Hover an answer shape (or clear with null); empty cells never hover. */
export function setHoveredCell(
  state: ViewState,
  payload: GridPayload,
  cell: { row: number; col: number } | null,
): ViewState {
  if (cell !== null) {
    const exists = payload.cells.some((c) => c.row === cell.row && c.col === cell.col);
    if (!exists) return state;
  }
  if (state.hoveredCell === null && cell === null) return state;
  return { ...state, hoveredCell: cell };
}
