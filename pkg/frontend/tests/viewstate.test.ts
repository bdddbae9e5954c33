import { describe, expect, it } from "vitest";

import {
  annotationIds,
  createViewState,
  setHoveredCell,
  stepCarousel,
  toggleAnnotation,
} from "../src/viewstate.js";
import { annotatedPayload, gridPayload, recomposedPayload } from "./fixtures.js";

describe("toggleAnnotation", () => {
  it("starts with nothing expanded", () => {
    const state = createViewState("s1", "annotated");
    expect(state.expandedAnnotations.size).toBe(0);
  });

  it("round-trips expand and collapse", () => {
    const payload = annotatedPayload();
    const initial = createViewState("s1", "annotated");
    const expanded = toggleAnnotation(initial, payload, "q1");
    expect(expanded.expandedAnnotations.has("q1")).toBe(true);
    const collapsed = toggleAnnotation(expanded, payload, "q1");
    expect(collapsed.expandedAnnotations.has("q1")).toBe(false);
    expect([...collapsed.expandedAnnotations]).toEqual([...initial.expandedAnnotations]);
  });

  it("ignores ids that are not in the payload", () => {
    const payload = annotatedPayload();
    const state = createViewState("s1", "annotated");
    expect(toggleAnnotation(state, payload, "ghost")).toBe(state);
  });

  it("expanded set stays within the payload's annotations", () => {
    const payload = annotatedPayload();
    let state = createViewState("s1", "annotated");
    for (const id of ["q1", "q2", "nope", "q1", "q2", "q2"]) {
      state = toggleAnnotation(state, payload, id);
      for (const expanded of state.expandedAnnotations) {
        expect(annotationIds(payload).has(expanded)).toBe(true);
      }
    }
  });
});

describe("stepCarousel", () => {
  it("steps forward and clamps at both ends", () => {
    const payload = recomposedPayload();
    let state = createViewState("s1", "recomposed");
    state = stepCarousel(state, payload, 0, 1);
    expect(state.carouselPositions.get(0)).toBe(1);
    const clamped = stepCarousel(state, payload, 0, 1);
    expect(clamped.carouselPositions.get(0)).toBe(1);
    const back = stepCarousel(clamped, payload, 0, -1);
    expect(back.carouselPositions.get(0)).toBe(0);
    expect(stepCarousel(back, payload, 0, -1).carouselPositions.get(0) ?? 0).toBe(0);
  });

  it("ignores units without a carousel", () => {
    const payload = recomposedPayload();
    payload.units[0].carousel_answers = [];
    const state = createViewState("s1", "recomposed");
    expect(stepCarousel(state, payload, 0, 1)).toBe(state);
  });
});

describe("setHoveredCell", () => {
  it("hovers only cells that exist", () => {
    const payload = gridPayload();
    const state = createViewState("s1", "grid");
    const hovered = setHoveredCell(state, payload, { row: 0, col: 1 });
    expect(hovered.hoveredCell).toEqual({ row: 0, col: 1 });
    expect(setHoveredCell(state, payload, { row: 1, col: 2 })).toBe(state);
  });

  it("clears on null", () => {
    const payload = gridPayload();
    let state = createViewState("s1", "grid");
    state = setHoveredCell(state, payload, { row: 0, col: 0 });
    expect(setHoveredCell(state, payload, null).hoveredCell).toBeNull();
  });
});
