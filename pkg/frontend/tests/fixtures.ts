import type { ArticlePayload, GridPayload, RecomposedPayload } from "../src/types.js";

export function annotatedPayload(): ArticlePayload {
  return {
    basis_source: "a.com",
    headline: "Taxes rise again",
    byline: "Source: a.com",
    blocks: [
      { type: "paragraph", text: "The mayor raised taxes because costs rose." },
      {
        type: "annotation",
        question_id: "q1",
        question_text: "Why did the mayor raise taxes?",
        anchor_paragraph: 0,
        answers: [
          { source_domain: "b.com", span_text: "to fund new schools", url: "https://b.com/x" },
          { source_domain: "c.com", span_text: "amid heavy protest", url: "https://c.com/x" },
        ],
        collapsed_default: true,
      },
      { type: "paragraph", text: "Officials promised further detail soon." },
      {
        type: "annotation",
        question_id: "q2",
        question_text: "Who opposed the decision?",
        anchor_paragraph: 1,
        answers: [
          { source_domain: "b.com", span_text: "several unions", url: "https://b.com/x" },
        ],
        collapsed_default: true,
      },
    ],
  };
}

export function recomposedPayload(): RecomposedPayload {
  return {
    story_title: "City tax increase",
    byline_sources: ["a.com", "b.com", "c.com"],
    intro_summary: "A sixty word summary would sit here.",
    units: [
      {
        question_text: "Why did the mayor raise taxes?",
        primary_answers: [
          {
            source_domain: "a.com",
            paragraph_text: "The mayor raised taxes because costs rose.",
            bold_char_range: [10, 22],
            url: "https://a.com/x",
          },
          {
            source_domain: "b.com",
            paragraph_text: "The mayor raised taxes to fund new schools.",
            bold_char_range: [24, 43],
            url: "https://b.com/x",
          },
        ],
        carousel_answers: [
          {
            source_domain: "c.com",
            paragraph_text: "The mayor once again raised taxes amid heavy protest.",
            bold_char_range: [34, 53],
            url: "https://c.com/x",
          },
          {
            source_domain: "d.com",
            paragraph_text: "The mayor raised taxes after a long debate.",
            bold_char_range: [24, 43],
            url: "https://d.com/x",
          },
        ],
      },
    ],
  };
}

export function gridPayload(): GridPayload {
  return {
    row_questions: [
      { question_text: "Why did the mayor raise taxes?", answer_count: 3 },
      { question_text: "Who opposed the decision?", answer_count: 2 },
    ],
    col_sources: [
      { source_domain: "a.com", questions_answered: 2 },
      { source_domain: "b.com", questions_answered: 2 },
      { source_domain: "c.com", questions_answered: 1 },
    ],
    cells: [
      { row: 0, col: 0, group_id: 0, style_index: 0, span_text: "because costs rose", url: "https://a.com/x" },
      { row: 0, col: 1, group_id: 1, style_index: 1, span_text: "to fund new schools", url: "https://b.com/x" },
      { row: 0, col: 2, group_id: 2, style_index: 2, span_text: "amid heavy protest", url: "https://c.com/x" },
      { row: 1, col: 0, group_id: 0, style_index: 0, span_text: "several unions", url: "https://a.com/x" },
      { row: 1, col: 1, group_id: 0, style_index: 0, span_text: "union leaders", url: "https://b.com/x" },
    ],
  };
}
