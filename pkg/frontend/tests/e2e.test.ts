/** End-to-end smoke against the real service: trains a small model set,
 * starts the HTTP server, and drives the actual UI components (in jsdom)
 * through real fetch calls. */

import { execFile, spawn, ChildProcess } from "node:child_process";
import { mkdtempSync, mkdirSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { promisify } from "node:util";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, CultureSimApi } from "../src/api.js";
import { ChatView } from "../src/chat.js";
import { InstructorView } from "../src/instructor.js";
import { reportFixture } from "./helpers.js";

const run = promisify(execFile);

const REPO_ROOT = resolve(__dirname, "..", "..");
const PORT = 8873;
const BASE = `http://127.0.0.1:${PORT}`;

const TRAINEE_LINES = [
  "Good morning captain Wang, how are you doing?",
  "Good morning captain Wang, how are you doing today? It's an honor to be here.",
  "Hello captain Wang, it's an honor to meet you today.",
];

let server: ChildProcess | null = null;
let workDir: string;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/api/scenarios`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  workDir = mkdtempSync(join(tmpdir(), "culturesim-e2e-"));
  const corpus = join(workDir, "corpus.jsonl");
  const models = join(workDir, "models");
  await run(
    "python3",
    ["-m", "culturesim.cli", "synth", "--out", corpus, "--count", "24", "--seed", "42"],
    { cwd: REPO_ROOT },
  );
  await run(
    "python3",
    ["-m", "culturesim.cli", "train", "--corpus", corpus, "--model", "rf",
     "--out", models, "--seed", "42"],
    { cwd: REPO_ROOT },
  );
  const dataDir = join(workDir, "data");
  mkdirSync(join(dataDir, "reports"), { recursive: true });
  writeFileSync(join(dataDir, "reports", "models.json"), JSON.stringify(reportFixture()));
  server = spawn(
    "python3",
    ["-m", "culturesim.cli", "serve", "--models", models, "--data", dataDir,
     "--port", String(PORT)],
    { cwd: REPO_ROOT, stdio: "ignore" },
  );
  await waitForServer();
}, 180_000);

afterAll(() => {
  server?.kill();
});

describe("e2e smoke", () => {
  it("runs a session with feedback cards for each reference utterance", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const api = new CultureSimApi(BASE);
    const view = new ChatView(api, root, { animationDelayMs: 0, debugScores: true });
    await view.start("dme-coalition");
    expect(view.inputDisabled).toBe(false);
    expect(root.querySelector(".bubble.avatar")!.textContent).toContain("Good Morning");

    for (const line of TRAINEE_LINES) {
      await view.submit(line);
    }
    const cards = root.querySelectorAll('[data-testid="feedback-card"]');
    expect(cards.length).toBe(3);
    // Debug mode shows the score chips; the greeting scores [1, 0, 0].
    const firstChips = Array.from(cards[0]!.querySelectorAll(".chip")).map(
      (chip) => chip.textContent,
    );
    expect(firstChips).toEqual(["1", "0", "0"]);
    root.remove();
  });

  it("surfaces the server-side turn gate as a wait notice on 409", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const api = new CultureSimApi(BASE);
    const view = new ChatView(api, root, { animationDelayMs: 0 });
    await view.start("dme-coalition");

    // A deliberately slow turn (large noisy utterance) keeps the server
    // busy with this session; the composer is disabled while it runs.
    const slowText = Array(60_000).fill("captain wang good morning honor").join(" ");
    const slowTurn = view.submit(slowText, 0.5);
    await new Promise((resolve) => setTimeout(resolve, 150));
    expect(view.inputDisabled).toBe(true);

    // Bypass the disabled input with raw submissions until one collides
    // with the in-flight turn; the server answers 409.
    let sawConflict = false;
    for (let attempt = 0; attempt < 12 && !sawConflict; attempt++) {
      const result = await view.submitBypassingGate("Good morning captain Wang.");
      sawConflict = result.status === 409;
    }
    expect(sawConflict).toBe(true);
    const notice = root.querySelector('[data-testid="notice"]')!;
    expect(notice.classList.contains("hidden")).toBe(false);
    expect(notice.textContent).toContain("wait");
    await slowTurn;
    root.remove();
  });

  it("renders the instructor report with 14 rows and aggregate footer", async () => {
    const root = document.createElement("div");
    document.body.append(root);
    const view = new InstructorView(new CultureSimApi(BASE), root);
    await view.showReport();
    const table = root.querySelector('[data-testid="report-table"]')!;
    expect(table.querySelectorAll("tbody tr").length).toBe(14);
    const footer = table.querySelectorAll("tfoot tr");
    expect(footer[0]!.textContent).toContain("Mean");
    expect(footer[1]!.textContent).toContain("Std. Deviation");
    root.remove();
  });

  it("renders the instructor log view for a finished session", async () => {
    const api = new CultureSimApi(BASE);
    const opened = await api.createSession("dme-coalition");
    await api.submitInput(opened.session_id, "Good morning Captain Wang.");
    const root = document.createElement("div");
    document.body.append(root);
    const view = new InstructorView(api, root);
    await view.showLog(opened.session_id);
    const rows = root.querySelectorAll('[data-testid="log-table"] tr');
    expect(rows.length).toBe(2);
    expect(rows[1]!.textContent).toContain("s01");
    root.remove();
  });

  it("propagates ended-session errors", async () => {
    const api = new CultureSimApi(BASE);
    const opened = await api.createSession("dme-coalition");
    const lines = [
      "Good morning Captain Wang.",
      "Are you the leader of the Chinese component of the coalition.",
      "Unfortunately Captain Heist had prior duties and I will be taking his place.",
      "He unfortunately had a prior engagements with other officers.",
      "Great let's get started sir.",
      "Captain Wang is there anything I can help you with?",
      "Well what are your concerns officer.",
      "Well Captain we haven't worked out all the kinks.",
      "I can give you a general outline now.",
      "We plan on bringing food, water, and medical supplies.",
      "The supply depot is down the way to the left.",
      "I will be around until the mission brief this afternoon.",
      "We will arrive at your staging area at 0800 sharp.",
      "Goodbye Captain Wang, sir. Safe travels.",
    ];
    for (const line of lines) {
      await api.submitInput(opened.session_id, line);
    }
    const failure = await api
      .submitInput(opened.session_id, "anyone there?")
      .catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(410);
  });
});
