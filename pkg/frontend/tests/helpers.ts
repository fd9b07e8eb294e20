import { ChatEvent, MetricsReport } from "../src/api.js";

export function avatarEvent(speaker: string, text: string): ChatEvent {
  return { kind: "avatar_lines", speaker, text, score: null };
}

export function guideEvent(text: string): ChatEvent {
  return { kind: "guide_note", speaker: null, text, score: null };
}

export function feedbackEvent(text: string, score: number[] | null = null): ChatEvent {
  return { kind: "feedback", speaker: null, text, score };
}

export function repeatEvent(text: string): ChatEvent {
  return { kind: "repeat_request", speaker: null, text, score: null };
}

export function endedEvent(): ChatEvent {
  return { kind: "session_ended", speaker: null, text: null, score: null };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** 14-row metrics fixture shaped like the service report. */
export function reportFixture(): MetricsReport {
  const rows = Array.from({ length: 14 }, (_, i) => ({
    model_id: i + 1,
    features: [3, 3, 2, 3, 2, 3, 3, 4, 3, 2, 1, 2, 3, 2][i] as number,
    f1: 80 + (i % 5),
    precision: 78 + (i % 7),
    recall: 84 + (i % 4),
    wer: 10 + i,
  }));
  const mean = { f1: 82.0, precision: 81.0, recall: 85.5, wer: 16.5 };
  const std = { f1: 1.4, precision: 2.0, recall: 1.1, wer: 4.2 };
  return { rows, mean, std };
}
