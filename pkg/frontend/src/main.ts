/** Browser entry: single-view reading mode and the two-column exercise. */

import { ApiClient } from "./api.js";
import { ExerciseController, TAB_SWITCH_LIMIT } from "./exercise.js";
import { renderView } from "./render.js";
import { formatClock, type TimerPhase } from "./timer.js";
import type { ArticlePayload, GridPayload, RecomposedPayload, ViewKind, ViewPayload } from "./types.js";
import {
  createViewState,
  setHoveredCell,
  stepCarousel,
  toggleAnnotation,
  type ViewState,
} from "./viewstate.js";

const VIEW_KINDS: ViewKind[] = ["annotated", "recomposed", "grid", "headlines", "article"];

export interface MountedView {
  element: HTMLElement;
  state: ViewState;
}

/** Mount a view into `container`, re-rendering on every state change. */
export function mountView(
  container: HTMLElement,
  storyId: string,
  kind: ViewKind,
  payload: ViewPayload,
  onOpenLink?: (url: string) => void,
): MountedView {
  const mounted: MountedView = { element: container, state: createViewState(storyId, kind) };

  const update = (next: ViewState) => {
    if (next === mounted.state) return;
    mounted.state = next;
    draw();
  };
  const handlers = {
    onToggleAnnotation: (questionId: string) =>
      update(toggleAnnotation(mounted.state, payload as ArticlePayload, questionId)),
    onStepCarousel: (unit: number, delta: number) =>
      update(stepCarousel(mounted.state, payload as RecomposedPayload, unit, delta)),
    onHoverCell: (cell: { row: number; col: number } | null) =>
      update(setHoveredCell(mounted.state, payload as GridPayload, cell)),
    onOpenLink,
  };
  const draw = () => {
    container.replaceChildren(renderView(kind, payload, mounted.state, handlers));
  };
  draw();
  return mounted;
}

function exerciseColumn(questions: string[], controller: ExerciseController): HTMLElement {
  const column = el("div", "answer-column");
  const banner = el("div", "timer-banner");
  banner.hidden = true;
  column.append(banner);
  const clock = el("div", "timer-clock", "0:00");
  column.append(clock);

  questions.forEach((question, index) => {
    const block = el("div", "answer-block");
    block.append(el("label", "answer-question", question));
    const box = document.createElement("textarea");
    box.rows = 3;
    box.placeholder = 'Answer as thoroughly as you can, or write "No answer".';
    box.addEventListener("input", () => controller.setAnswer(index, box.value));
    block.append(box);
    column.append(block);
  });

  const warnings = el("div", "tab-warnings");
  column.append(warnings);
  const submit = el("button", "submit-button", "Submit answers");
  submit.type = "button";
  submit.addEventListener("click", () => void controller.submit());
  column.append(submit);
  return column;
}

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

/** Run the three-assignment exercise session sequentially. */
export async function runExercise(root: HTMLElement, api: ApiClient): Promise<void> {
  const participant = `p-${Math.random().toString(36).slice(2, 10)}`;
  const { stories } = await api.listStories();
  if (stories.length < 3) {
    root.replaceChildren(el("div", "error-panel", "need at least 3 processed stories"));
    return;
  }
  const choices = stories.slice(0, 3).map((s) => s.story_id);
  const session = await api.createSession(participant, choices);

  for (let index = 0; index < session.assignments.length; index++) {
    const assignment = session.assignments[index];
    const payload = await api.getView(assignment.story_id, assignment.interface_kind);
    const { questions } = await api.getQuestions(assignment.story_id);
    await runAssignment(root, api, session.session_id, index, assignment.interface_kind,
      assignment.story_id, payload, questions);
  }
  root.replaceChildren(el("div", "exercise-done", "All three exercises are submitted. Thank you!"));
}

function runAssignment(
  root: HTMLElement,
  api: ApiClient,
  sessionId: string,
  index: number,
  kind: ViewKind,
  storyId: string,
  payload: ViewPayload,
  questions: string[],
): Promise<void> {
  return new Promise((resolve) => {
    const layout = el("div", "exercise-layout");
    const reading = el("div", "reading-column");
    layout.append(reading);

    let timerHandle = 0;
    const startedAt = Date.now();
    const controller = new ExerciseController({
      submit: (body) => api.submitAssignment(sessionId, index, body).then(() => undefined),
      onPhaseChange: (phase: TimerPhase) => {
        const banner = layout.querySelector<HTMLElement>(".timer-banner");
        if (!banner) return;
        if (phase === "grace") {
          banner.hidden = false;
          banner.textContent =
            "Six minutes are up. You have three more minutes to finish your answers.";
        }
      },
      onTabSwitchWarning: ({ count, final }) => {
        const box = layout.querySelector<HTMLElement>(".tab-warnings");
        if (!box) return;
        const warning = el("div", final ? "tab-warning final" : "tab-warning");
        warning.textContent = final
          ? `Tab switch ${count}: final warning, further switches disqualify the session.`
          : `Tab switch ${count}: please stay on the exercise.`;
        box.append(warning);
      },
      onLocked: () => {
        layout.querySelectorAll("textarea").forEach((box) => (box.disabled = true));
        const button = layout.querySelector<HTMLButtonElement>(".submit-button");
        if (button) button.disabled = true;
      },
      onSubmitted: () => {
        window.clearInterval(timerHandle);
        document.removeEventListener("visibilitychange", onVisibility);
        resolve();
      },
      onSubmitError: () => {
        window.setTimeout(() => void controller.retry(), 2000);
      },
    });

    const onVisibility = () => {
      if (document.visibilityState === "hidden" && controller.tabSwitchCount < TAB_SWITCH_LIMIT + 5) {
        controller.recordTabSwitch();
      }
    };
    document.addEventListener("visibilitychange", onVisibility);

    layout.append(exerciseColumn(questions, controller));
    mountView(reading, storyId, kind, payload, () => controller.recordLinkOpen());
    root.replaceChildren(layout);

    timerHandle = window.setInterval(() => {
      const elapsed = (Date.now() - startedAt) / 1000;
      controller.tick(elapsed);
      const clock = layout.querySelector<HTMLElement>(".timer-clock");
      if (clock) clock.textContent = formatClock(elapsed);
    }, 1000);
  });
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  const params = new URLSearchParams(window.location.search);
  const api = new ApiClient("");
  try {
    if (params.get("exercise")) {
      await runExercise(root, api);
      return;
    }
    const storyId = params.get("story");
    const kind = (params.get("kind") ?? "annotated") as ViewKind;
    if (!storyId || !VIEW_KINDS.includes(kind)) {
      const { stories } = await api.listStories();
      const list = el("ul", "story-list");
      for (const story of stories) {
        const item = el("li");
        for (const k of VIEW_KINDS) {
          const link = el("a", "view-link", k);
          (link as HTMLAnchorElement).href = `/?story=${encodeURIComponent(story.story_id)}&kind=${k}`;
          item.append(link, document.createTextNode(" "));
        }
        item.prepend(el("strong", undefined, `${story.title} `));
        list.append(item);
      }
      root.replaceChildren(el("h1", undefined, "Stories"), list);
      return;
    }
    const payload = await api.getView(storyId, kind);
    mountView(root, storyId, kind, payload);
  } catch (error) {
    root.replaceChildren(el("div", "error-panel", String(error)));
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot();
}
