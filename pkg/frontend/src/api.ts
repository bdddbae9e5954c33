/** Thin client for the story service endpoints. */

import type { Session, StorySummary, SubmitPayload, ViewKind, ViewPayload } from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      const body = await response.text();
      throw new Error(`${response.status} on ${path}: ${body}`);
    }
    return (await response.json()) as T;
  }

  listStories(): Promise<{ stories: StorySummary[] }> {
    return this.request("/stories");
  }

  getView(storyId: string, kind: ViewKind): Promise<ViewPayload> {
    return this.request(`/stories/${encodeURIComponent(storyId)}/views/${kind}`);
  }

  getQuestions(storyId: string): Promise<{ story_id: string; questions: string[] }> {
    return this.request(`/stories/${encodeURIComponent(storyId)}/questions`);
  }

  createSession(participantId: string, storyChoices: string[]): Promise<Session> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ participant_id: participantId, story_choices: storyChoices }),
    });
  }

  getSession(sessionId: string): Promise<Session> {
    return this.request(`/sessions/${encodeURIComponent(sessionId)}`);
  }

  submitAssignment(sessionId: string, index: number, payload: SubmitPayload): Promise<Session> {
    return this.request(
      `/sessions/${encodeURIComponent(sessionId)}/assignments/${index}/submit`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      },
    );
  }
}
