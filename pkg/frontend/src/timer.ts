/** Exercise timing: 6 active minutes, then a 3-minute grace window. */

export const ACTIVE_LIMIT_SECONDS = 360;
export const GRACE_LIMIT_SECONDS = 540;

export type TimerPhase = "active" | "grace" | "expired";

const ORDER: Record<TimerPhase, number> = { active: 0, grace: 1, expired: 2 };

/** Phase for an elapsed time; transitions occur exactly at 360s and 540s. */
export function phaseFor(elapsedSeconds: number): TimerPhase {
  if (elapsedSeconds >= GRACE_LIMIT_SECONDS) return "expired";
  if (elapsedSeconds >= ACTIVE_LIMIT_SECONDS) return "grace";
  return "active";
}

/** Later of two phases; keeps observed phases monotone under clock jitter. */
export function laterPhase(a: TimerPhase, b: TimerPhase): TimerPhase {
  return ORDER[a] >= ORDER[b] ? a : b;
}

export function formatClock(elapsedSeconds: number): string {
  const total = Math.max(0, Math.floor(elapsedSeconds));
  const minutes = Math.floor(total / 60);
  const seconds = total % 60;
  return `${minutes}:${String(seconds).padStart(2, "0")}`;
}
