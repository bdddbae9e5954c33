/** Payload shapes served by the story service. */

export type ViewKind = "annotated" | "recomposed" | "grid" | "headlines" | "article";

export interface AnnotationAnswer {
  source_domain: string;
  span_text: string;
  url: string;
}

export interface AnnotationBlock {
  type: "annotation";
  question_id: string;
  question_text: string;
  anchor_paragraph: number;
  answers: AnnotationAnswer[];
  collapsed_default: boolean;
}

export interface ParagraphBlock {
  type: "paragraph";
  text: string;
}

export type ArticleBlock = ParagraphBlock | AnnotationBlock;

export interface ArticlePayload {
  basis_source: string;
  headline: string;
  byline: string;
  blocks: ArticleBlock[];
}

export interface UnitAnswer {
  source_domain: string;
  paragraph_text: string;
  bold_char_range: [number, number];
  url: string;
}

export interface QuestionUnit {
  question_text: string;
  primary_answers: UnitAnswer[];
  carousel_answers: UnitAnswer[];
}

export interface RecomposedPayload {
  story_title: string;
  byline_sources: string[];
  intro_summary: string;
  units: QuestionUnit[];
}

export interface GridCell {
  row: number;
  col: number;
  group_id: number;
  style_index: number;
  span_text: string;
  url: string;
}

export interface GridPayload {
  row_questions: { question_text: string; answer_count: number }[];
  col_sources: { source_domain: string; questions_answered: number }[];
  cells: GridCell[];
}

export interface HeadlinesPayload {
  entries: { source_domain: string; headline: string; url: string }[];
}

export type ViewPayload = ArticlePayload | RecomposedPayload | GridPayload | HeadlinesPayload;

export interface StorySummary {
  story_id: string;
  title: string;
  processed_at: string;
  source_count: number;
  question_count: number;
}

export interface Assignment {
  story_id: string;
  interface_kind: ViewKind;
  started_at: string | null;
  submitted: boolean;
  answers: string[] | null;
  links_opened: number;
  tab_switches: number;
  duration_seconds: number;
}

export interface Session {
  session_id: string;
  participant_id: string;
  seed: number;
  status: "open" | "submitted";
  created_at: string;
  tab_switches: number;
  assignments: Assignment[];
}

export interface SubmitPayload {
  answers: string[];
  links_opened: number;
  tab_switches: number;
  duration_seconds: number;
}
