/** Instructor views: read-only session log table and model report table
 * with mean/std footer rows. */

import { CultureSimApi, MetricsReport, TurnRecord } from "./api.js";

const METRIC_COLUMNS = ["f1", "precision", "recall", "wer"] as const;

function cell(tag: "td" | "th", text: string): HTMLTableCellElement {
  const node = document.createElement(tag) as HTMLTableCellElement;
  node.textContent = text;
  return node;
}

function headerRow(labels: string[]): HTMLTableRowElement {
  const row = document.createElement("tr");
  for (const label of labels) row.append(cell("th", label));
  return row;
}

export function renderLogTable(records: TurnRecord[], root: HTMLElement): void {
  root.innerHTML = "";
  if (records.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No turns logged yet.";
    root.append(empty);
    return;
  }
  const table = document.createElement("table");
  table.className = "log-table";
  table.setAttribute("data-testid", "log-table");
  table.append(headerRow(["Section", "Utterance", "Confidence", "Score", "Feedback"]));
  for (const record of records) {
    const row = document.createElement("tr");
    row.append(
      cell("td", record.section),
      cell("td", record.transcript),
      cell("td", record.confidence.toFixed(2)),
      cell("td", record.score ? `[${record.score.join(", ")}]` : "(not scored)"),
      cell("td", record.feedback ?? ""),
    );
    table.append(row);
  }
  root.append(table);
}

export function renderReportTable(report: MetricsReport, root: HTMLElement): void {
  root.innerHTML = "";
  if (!Array.isArray(report.rows) || !report.mean || !report.std) {
    throw new TypeError("report is missing rows/mean/std");
  }
  const table = document.createElement("table");
  table.className = "report-table";
  table.setAttribute("data-testid", "report-table");
  table.append(
    headerRow(["Model Id", "Features", "F1 (%)", "Precision (%)", "Recall (%)", "WER (%)"]),
  );
  const body = document.createElement("tbody");
  for (const row of report.rows) {
    const tr = document.createElement("tr");
    tr.append(cell("td", String(row.model_id)), cell("td", String(row.features)));
    for (const column of METRIC_COLUMNS) {
      tr.append(cell("td", row[column].toFixed(1)));
    }
    body.append(tr);
  }
  table.append(body);
  const footer = document.createElement("tfoot");
  for (const [label, values] of [
    ["Mean", report.mean],
    ["Std. Deviation", report.std],
  ] as const) {
    const tr = document.createElement("tr");
    tr.className = "aggregate";
    tr.append(cell("td", label), cell("td", ""));
    for (const column of METRIC_COLUMNS) {
      tr.append(cell("td", (values[column] ?? NaN).toFixed(1)));
    }
    footer.append(tr);
  }
  table.append(footer);
  root.append(table);
}

export class InstructorView {
  constructor(
    private readonly api: CultureSimApi,
    readonly root: HTMLElement,
  ) {}

  async showLog(sessionId: string): Promise<void> {
    try {
      const log = await this.api.fetchLog(sessionId);
      renderLogTable(log.records, this.root);
    } catch (error) {
      this.renderError(`Could not load the session log: ${String(error)}`);
    }
  }

  async showReport(): Promise<void> {
    try {
      const report = await this.api.fetchReport();
      renderReportTable(report, this.root);
    } catch (error) {
      this.renderError(`No model report available: ${String(error)}`);
    }
  }

  private renderError(message: string): void {
    this.root.innerHTML = "";
    const panel = document.createElement("div");
    panel.className = "error-panel";
    panel.setAttribute("data-testid", "error-panel");
    panel.textContent = message;
    this.root.append(panel);
  }
}
