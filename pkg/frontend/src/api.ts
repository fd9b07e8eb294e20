/** Typed client for the culturesim HTTP API. All pedagogy (scoring,
 * feedback wording, gating) lives server-side; this module only moves
 * JSON. */

export type EventKind =
  | "avatar_lines"
  | "guide_note"
  | "repeat_request"
  | "feedback"
  | "session_ended";

export interface ChatEvent {
  kind: EventKind;
  text: string | null;
  speaker: string | null;
  score: number[] | null;
}

export interface SessionOpened {
  session_id: string;
  events: ChatEvent[];
}

export interface TurnRecord {
  node_id: string;
  section: string;
  raw_input: string;
  transcript: string;
  confidence: number;
  score: number[] | null;
  feedback: string | null;
  timestamp: number;
}

export interface MetricsRow {
  model_id: number | string;
  section?: string;
  features: number;
  f1: number;
  precision: number;
  recall: number;
  wer: number;
}

export interface MetricsReport {
  rows: MetricsRow[];
  mean: Record<string, number>;
  std: Record<string, number>;
}

export interface ScenarioSummary {
  id: string;
  scenes: number;
  evaluation_points: string[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export interface CreateSessionOptions {
  alpha?: number;
  debugScores?: boolean;
  asrMode?: "passthrough" | "simulated_noise";
  seed?: number;
}

export class CultureSimApi {
  constructor(readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async listScenarios(): Promise<ScenarioSummary[]> {
    return parseOrThrow(await fetch(this.url("/api/scenarios")));
  }

  async createSession(
    scenarioId: string,
    options: CreateSessionOptions = {},
  ): Promise<SessionOpened> {
    const body: Record<string, unknown> = { scenario_id: scenarioId };
    if (options.alpha !== undefined) body.alpha = options.alpha;
    if (options.debugScores !== undefined) body.debug_scores = options.debugScores;
    if (options.asrMode !== undefined) body.asr_mode = options.asrMode;
    if (options.seed !== undefined) body.seed = options.seed;
    const response = await fetch(this.url("/api/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseOrThrow(response);
  }

  async submitInput(
    sessionId: string,
    text: string,
    simulateWer?: number,
  ): Promise<{ events: ChatEvent[] }> {
    const body: Record<string, unknown> = { text };
    if (simulateWer !== undefined) body.simulate_wer = simulateWer;
    const response = await fetch(this.url(`/api/sessions/${sessionId}/input`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseOrThrow(response);
  }

  async fetchLog(sessionId: string): Promise<{ session_id: string; records: TurnRecord[] }> {
    return parseOrThrow(await fetch(this.url(`/api/sessions/${sessionId}/log`)));
  }

  async fetchReport(): Promise<MetricsReport> {
    return parseOrThrow(await fetch(this.url("/api/reports/models")));
  }
}
