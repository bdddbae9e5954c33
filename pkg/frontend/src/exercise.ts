/** Controller for one timed exercise assignment.
 *
 * Holds the answer texts, the tab-switch and link counters, and the timer
 * phase; locks inputs and auto-submits exactly once when the grace window
 * runs out. A failed submit keeps the answers and can be retried.
 */

import { laterPhase, phaseFor, type TimerPhase } from "./timer.js";
import type { SubmitPayload } from "./types.js";

export const ANSWER_COUNT = 4;
export const TAB_SWITCH_LIMIT = 3;

export interface TabSwitchWarning {
  count: number;
  final: boolean;
}

export interface ExerciseCallbacks {
  submit: (payload: SubmitPayload) => Promise<void>;
  onPhaseChange?: (phase: TimerPhase) => void;
  onTabSwitchWarning?: (warning: TabSwitchWarning) => void;
  onLocked?: () => void;
  onSubmitted?: () => void;
  onSubmitError?: (error: unknown) => void;
}

export class ExerciseController {
  readonly answers: string[] = Array.from({ length: ANSWER_COUNT }, () => "");
  phase: TimerPhase = "active";
  elapsedSeconds = 0;
  linkCount = 0;
  tabSwitchCount = 0;
  locked = false;
  submitted = false;
  submitPending = false;
  private submitStarted = false;

  constructor(private readonly callbacks: ExerciseCallbacks) {}

  setAnswer(index: number, text: string): void {
    if (this.locked || index < 0 || index >= ANSWER_COUNT) return;
    this.answers[index] = text;
  }

  recordLinkOpen(): void {
    this.linkCount += 1;
  }

  /** Count a visibility change away from the task and emit a warning. */
  recordTabSwitch(): TabSwitchWarning {
    this.tabSwitchCount += 1;
    const warning = {
      count: this.tabSwitchCount,
      final: this.tabSwitchCount >= TAB_SWITCH_LIMIT,
    };
    this.callbacks.onTabSwitchWarning?.(warning);
    return warning;
  }

  /** Advance the clock; phases only ever move forward. */
  tick(elapsedSeconds: number): void {
    this.elapsedSeconds = Math.max(this.elapsedSeconds, elapsedSeconds);
    const next = laterPhase(this.phase, phaseFor(this.elapsedSeconds));
    if (next !== this.phase) {
      this.phase = next;
      this.callbacks.onPhaseChange?.(next);
    }
    if (this.phase === "expired" && !this.submitStarted) {
      this.locked = true;
      this.callbacks.onLocked?.();
      void this.submit();
    }
  }

  /** Submit current text; on failure the text is preserved for a retry. */
  async submit(): Promise<boolean> {
    if (this.submitted || this.submitStarted) return this.submitted;
    this.submitStarted = true;
    const payload: SubmitPayload = {
      answers: [...this.answers],
      links_opened: this.linkCount,
      tab_switches: this.tabSwitchCount,
      duration_seconds: this.elapsedSeconds,
    };
    try {
      await this.callbacks.submit(payload);
      this.submitted = true;
      this.submitPending = false;
      this.callbacks.onSubmitted?.();
    } catch (error) {
      this.submitStarted = false;
      this.submitPending = true;
      this.callbacks.onSubmitError?.(error);
    }
    return this.submitted;
  }

  /** Re-attempt a failed submit with the preserved answers. */
  async retry(): Promise<boolean> {
    if (!this.submitPending) return this.submitted;
    return this.submit();
  }
}
