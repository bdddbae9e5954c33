/** Structural payload validation; returns the first offending field path. */

import type { ViewKind } from "./types.js";

type Check = (value: unknown, path: string) => string | null;

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function requireString(value: Record<string, unknown>, key: string, path: string): string | null {
  return typeof value[key] === "string" ? null : `${path}${key}`;
}

function requireNumber(value: Record<string, unknown>, key: string, path: string): string | null {
  return typeof value[key] === "number" ? null : `${path}${key}`;
}

function requireArray(
  value: Record<string, unknown>,
  key: string,
  path: string,
  item: Check,
): string | null {
  const raw = value[key];
  if (!Array.isArray(raw)) return `${path}${key}`;
  for (let i = 0; i < raw.length; i++) {
    const found = item(raw[i], `${path}${key}[${i}].`);
    if (found) return found;
  }
  return null;
}

const checkArticle: Check = (payload, path) => {
  if (!isRecord(payload)) return path.slice(0, -1) || "payload";
  return (
    requireString(payload, "headline", path) ??
    requireString(payload, "byline", path) ??
    requireString(payload, "basis_source", path) ??
    requireArray(payload, "blocks", path, (block, blockPath) => {
      if (!isRecord(block)) return blockPath.slice(0, -1);
      if (block.type === "paragraph") return requireString(block, "text", blockPath);
      if (block.type === "annotation") {
        return (
          requireString(block, "question_id", blockPath) ??
          requireString(block, "question_text", blockPath) ??
          requireNumber(block, "anchor_paragraph", blockPath) ??
          requireArray(block, "answers", blockPath, (answer, answerPath) => {
            if (!isRecord(answer)) return answerPath.slice(0, -1);
            return (
              requireString(answer, "source_domain", answerPath) ??
              requireString(answer, "span_text", answerPath) ??
              requireString(answer, "url", answerPath)
            );
          })
        );
      }
      return `${blockPath}type`;
    })
  );
};

const checkUnitAnswer: Check = (answer, path) => {
  if (!isRecord(answer)) return path.slice(0, -1);
  if (
    !Array.isArray(answer.bold_char_range) ||
    answer.bold_char_range.length !== 2 ||
    answer.bold_char_range.some((v) => typeof v !== "number")
  ) {
    return `${path}bold_char_range`;
  }
  return (
    requireString(answer, "source_domain", path) ??
    requireString(answer, "paragraph_text", path) ??
    requireString(answer, "url", path)
  );
};

const checkRecomposed: Check = (payload, path) => {
  if (!isRecord(payload)) return "payload";
  return (
    requireString(payload, "story_title", path) ??
    requireString(payload, "intro_summary", path) ??
    requireArray(payload, "byline_sources", path, (s, p) =>
      typeof s === "string" ? null : p.slice(0, -1),
    ) ??
    requireArray(payload, "units", path, (unit, unitPath) => {
      if (!isRecord(unit)) return unitPath.slice(0, -1);
      return (
        requireString(unit, "question_text", unitPath) ??
        requireArray(unit, "primary_answers", unitPath, checkUnitAnswer) ??
        requireArray(unit, "carousel_answers", unitPath, checkUnitAnswer)
      );
    })
  );
};

const checkGrid: Check = (payload, path) => {
  if (!isRecord(payload)) return "payload";
  return (
    requireArray(payload, "row_questions", path, (row, rowPath) => {
      if (!isRecord(row)) return rowPath.slice(0, -1);
      return (
        requireString(row, "question_text", rowPath) ?? requireNumber(row, "answer_count", rowPath)
      );
    }) ??
    requireArray(payload, "col_sources", path, (col, colPath) => {
      if (!isRecord(col)) return colPath.slice(0, -1);
      return (
        requireString(col, "source_domain", colPath) ??
        requireNumber(col, "questions_answered", colPath)
      );
    }) ??
    requireArray(payload, "cells", path, (cell, cellPath) => {
      if (!isRecord(cell)) return cellPath.slice(0, -1);
      return (
        requireNumber(cell, "row", cellPath) ??
        requireNumber(cell, "col", cellPath) ??
        requireNumber(cell, "group_id", cellPath) ??
        requireNumber(cell, "style_index", cellPath) ??
        requireString(cell, "span_text", cellPath) ??
        requireString(cell, "url", cellPath)
      );
    })
  );
};

const checkHeadlines: Check = (payload, path) => {
  if (!isRecord(payload)) return "payload";
  return requireArray(payload, "entries", path, (entry, entryPath) => {
    if (!isRecord(entry)) return entryPath.slice(0, -1);
    return (
      requireString(entry, "source_domain", entryPath) ??
      requireString(entry, "headline", entryPath) ??
      requireString(entry, "url", entryPath)
    );
  });
};

const CHECKS: Record<ViewKind, Check> = {
  annotated: checkArticle,
  article: checkArticle,
  recomposed: checkRecomposed,
  grid: checkGrid,
  headlines: checkHeadlines,
};

/** Null when the payload matches its view schema, else the offending field. */
export function validatePayload(kind: ViewKind, payload: unknown): string | null {
  const check = CHECKS[kind];
  if (!check) return "kind";
  return check(payload, "");
}
