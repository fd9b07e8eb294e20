import { CultureSimApi } from "./api.js";
import { ChatView } from "./chat.js";
import { InstructorView } from "./instructor.js";

function mustFind(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

async function boot(): Promise<void> {
  const api = new CultureSimApi("");
  const params = new URLSearchParams(window.location.search);
  const debug = params.get("debug") === "1";

  const chatRoot = mustFind("chat");
  const instructorRoot = mustFind("instructor");
  const tabs = Array.from(document.querySelectorAll<HTMLButtonElement>("[data-tab]"));

  const chat = new ChatView(api, chatRoot, { debugScores: debug });
  const instructor = new InstructorView(api, mustFind("instructor-content"));

  for (const tab of tabs) {
    tab.addEventListener("click", () => {
      for (const other of tabs) other.classList.toggle("active", other === tab);
      const showChat = tab.dataset.tab === "chat";
      chatRoot.classList.toggle("hidden", !showChat);
      instructorRoot.classList.toggle("hidden", showChat);
    });
  }

  mustFind("show-report").addEventListener("click", () => void instructor.showReport());
  const logForm = mustFind("log-form") as HTMLFormElement;
  logForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const input = mustFind("log-session-id") as HTMLInputElement;
    if (input.value.trim()) void instructor.showLog(input.value.trim());
  });

  const scenarios = await api.listScenarios();
  const first = scenarios[0];
  if (first) {
    await chat.start(first.id);
  }
}

void boot();
