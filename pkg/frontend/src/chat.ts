/** Trainee chat view: renders the server's event stream and keeps the
 * input gated while the avatar is "speaking". The disabled input is a
 * courtesy only; the server enforces the turn gate and a 409 from it is
 * surfaced as a wait notice. */

import { ApiError, ChatEvent, CultureSimApi } from "./api.js";

export interface ChatViewOptions {
  /** Per-event reveal delay in ms; 0 disables the animation. */
  animationDelayMs?: number;
  debugScores?: boolean;
}

const WAIT_NOTICE = "Please wait for the avatar to finish before answering.";

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

export class ChatView {
  readonly root: HTMLElement;
  private readonly api: CultureSimApi;
  private readonly delay: number;
  private readonly debugScores: boolean;

  private stream!: HTMLElement;
  private guidePanel!: HTMLElement;
  private inputBox!: HTMLInputElement;
  private sendButton!: HTMLButtonElement;
  private notice!: HTMLElement;
  private downloadButton!: HTMLButtonElement;

  private sessionId: string | null = null;
  private ended = false;
  private busy = false;
  private transcript: string[] = [];

  constructor(api: CultureSimApi, root: HTMLElement, options: ChatViewOptions = {}) {
    this.api = api;
    this.root = root;
    this.delay = options.animationDelayMs ?? 250;
    this.debugScores = options.debugScores ?? false;
    this.mount();
  }

  private mount(): void {
    this.root.innerHTML = "";
    this.root.classList.add("chat-view");
    this.guidePanel = element("aside", "guide-panel empty");
    this.guidePanel.setAttribute("data-testid", "guide-panel");
    this.stream = element("section", "event-stream");
    this.stream.setAttribute("data-testid", "event-stream");
    this.notice = element("div", "notice hidden");
    this.notice.setAttribute("data-testid", "notice");

    const form = element("form", "composer");
    this.inputBox = element("input", "composer-input");
    this.inputBox.type = "text";
    this.inputBox.placeholder = "Speak to the avatar...";
    this.inputBox.disabled = true;
    this.sendButton = element("button", "composer-send", "Send");
    this.sendButton.type = "submit";
    this.sendButton.disabled = true;
    form.append(this.inputBox, this.sendButton);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });

    this.downloadButton = element("button", "download hidden", "Download transcript");
    this.downloadButton.type = "button";
    this.downloadButton.addEventListener("click", () => this.downloadTranscript());

    const main = element("div", "chat-main");
    main.append(this.stream, this.notice, form, this.downloadButton);
    this.root.append(main, this.guidePanel);
  }

  get inputDisabled(): boolean {
    return this.inputBox.disabled;
  }

  get sessionEnded(): boolean {
    return this.ended;
  }

  transcriptText(): string {
    return this.transcript.join("\n") + "\n";
  }

  async start(scenarioId: string): Promise<void> {
    this.setGate(true);
    try {
      const opened = await this.api.createSession(scenarioId, {
        debugScores: this.debugScores,
      });
      this.sessionId = opened.session_id;
      await this.renderEvents(opened.events);
    } catch (error) {
      this.showError(error);
      return;
    }
    if (!this.ended) this.setGate(false);
  }

  /** Submit the composer text (or an explicit value) as the trainee turn.
   * ``simulateWer`` forwards the per-turn noise control. */
  async submit(text?: string, simulateWer?: number): Promise<void> {
    const value = (text ?? this.inputBox.value).trim();
    if (!value || this.sessionId === null || this.ended || this.busy) return;
    this.busy = true;
    this.setGate(true);
    this.appendTrainee(value);
    this.inputBox.value = "";
    try {
      const turn = await this.api.submitInput(this.sessionId, value, simulateWer);
      await this.renderEvents(turn.events);
    } catch (error) {
      this.showError(error);
    } finally {
      this.busy = false;
      if (!this.ended) this.setGate(false);
    }
  }

  /** Send a turn without the composer, as a raw client would; used to
   * prove the server-side gate stands on its own. */
  async submitBypassingGate(text: string): Promise<{ status: number }> {
    if (this.sessionId === null) throw new Error("no session");
    try {
      const turn = await this.api.submitInput(this.sessionId, text);
      await this.renderEvents(turn.events);
      return { status: 200 };
    } catch (error) {
      this.showError(error);
      return { status: error instanceof ApiError ? error.status : 0 };
    }
  }

  private setGate(closed: boolean): void {
    this.inputBox.disabled = closed || this.ended;
    this.sendButton.disabled = closed || this.ended;
  }

  private async renderEvents(events: ChatEvent[]): Promise<void> {
    for (const event of events) {
      this.renderEvent(event);
      if (this.delay > 0) await sleep(this.delay);
    }
  }

  private renderEvent(event: ChatEvent): void {
    switch (event.kind) {
      case "avatar_lines": {
        const bubble = element("div", "bubble avatar");
        bubble.append(
          element("div", "speaker", event.speaker ?? "Avatar"),
          element("div", "text", event.text ?? ""),
        );
        this.stream.append(bubble);
        this.transcript.push(`${event.speaker ?? "Avatar"}: ${event.text ?? ""}`);
        break;
      }
      case "guide_note": {
        this.stream.append(element("div", "bubble guide", event.text ?? ""));
        this.guidePanel.textContent = event.text ?? "";
        this.guidePanel.classList.remove("empty");
        this.transcript.push(`[Guide] ${event.text ?? ""}`);
        break;
      }
      case "repeat_request": {
        const bubble = element("div", "bubble avatar repeat");
        bubble.append(
          element("div", "speaker", "Avatar"),
          element("div", "text", event.text ?? ""),
        );
        this.stream.append(bubble);
        this.transcript.push(`[Repeat] ${event.text ?? ""}`);
        break;
      }
      case "feedback": {
        const card = element("div", "feedback-card");
        card.setAttribute("data-testid", "feedback-card");
        card.append(element("div", "feedback-title", "Feedback"));
        card.append(element("div", "feedback-text", event.text ?? ""));
        if (event.score) {
          const chips = element("div", "score-chips");
          for (const bit of event.score) {
            chips.append(element("span", `chip ${bit ? "hit" : "miss"}`, String(bit)));
          }
          card.append(chips);
        }
        this.stream.append(card);
        this.transcript.push(`[Feedback] ${event.text ?? ""}`);
        break;
      }
      case "session_ended": {
        this.ended = true;
        this.stream.append(element("div", "bubble system", "Session complete."));
        this.transcript.push("[Session ended]");
        this.setGate(true);
        this.downloadButton.classList.remove("hidden");
        break;
      }
    }
  }

  private appendTrainee(text: string): void {
    const bubble = element("div", "bubble trainee");
    bubble.append(element("div", "text", text));
    this.stream.append(bubble);
    this.transcript.push(`You: ${text}`);
  }

  private showError(error: unknown): void {
    if (error instanceof ApiError && error.status === 409) {
      this.flashNotice(WAIT_NOTICE);
      return;
    }
    if (error instanceof ApiError && error.status === 410) {
      this.flashNotice("This session has ended.");
      return;
    }
    const message =
      error instanceof ApiError
        ? `Server error: ${error.detail}`
        : "Network problem. Check the connection and try again.";
    this.flashNotice(message, true);
  }

  private flashNotice(message: string, isError = false): void {
    this.notice.textContent = message;
    this.notice.classList.remove("hidden");
    this.notice.classList.toggle("error", isError);
  }

  private downloadTranscript(): void {
    const blob = new Blob([this.transcriptText()], { type: "text/plain" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "transcript.txt";
    link.click();
    URL.revokeObjectURL(link.href);
  }
}
