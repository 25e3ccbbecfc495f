import type { CandidatePage, CandidateRecord, CandidateStatus } from "./types.js";

export type QueueAction = "accept_concept" | "accept_property" | "accept_synonym" | "reject" | "undo";

/** Exactly the actions the API accepts for a row in this status:
 * pending rows can be decided, decided rows can only be undone. */
export function actionsFor(status: CandidateStatus): QueueAction[] {
  if (status === "pending") {
    return ["accept_concept", "accept_property", "accept_synonym", "reject"];
  }
  return ["undo"];
}

const ACTION_LABELS: Record<QueueAction, string> = {
  accept_concept: "concept",
  accept_property: "property",
  accept_synonym: "synonym",
  reject: "reject",
  undo: "undo",
};

const ACTION_KEYS: Record<string, QueueAction> = {
  c: "accept_concept",
  p: "accept_property",
  s: "accept_synonym",
  r: "reject",
  u: "undo",
};

export interface QueueFilter {
  status: CandidateStatus | null;
  n: number | null;
}

export interface QueueHandlers {
  onAction(phrase: string, action: QueueAction): void;
  onFilter(filter: QueueFilter): void;
  onPage(offset: number): void;
}

/** The ranked candidate list with per-row actions. Renders whatever the
 * server returned, in server order; the only client-side filtering is
 * the n-gram length toggle, which hides rows without reordering. */
export class ReviewQueue {
  readonly el: HTMLElement;
  private readonly handlers: QueueHandlers;
  private readonly statusSelect: HTMLSelectElement;
  private readonly nSelect: HTMLSelectElement;
  private readonly meta: HTMLElement;
  private readonly tbody: HTMLTableSectionElement;
  private readonly prev: HTMLButtonElement;
  private readonly next: HTMLButtonElement;
  private page: CandidatePage | null = null;
  private filter: QueueFilter = { status: null, n: null };
  private cursor = 0;

  constructor(doc: Document, handlers: QueueHandlers) {
    this.handlers = handlers;
    this.el = doc.createElement("section");
    this.el.className = "queue";
    this.el.tabIndex = 0;

    const bar = doc.createElement("div");
    bar.className = "queue-bar";
    this.statusSelect = doc.createElement("select");
    this.statusSelect.className = "queue-status-filter";
    for (const value of ["", "pending", "concept", "property", "synonym", "rejected"]) {
      const option = doc.createElement("option");
      option.value = value;
      option.textContent = value === "" ? "all statuses" : value;
      this.statusSelect.appendChild(option);
    }
    this.nSelect = doc.createElement("select");
    this.nSelect.className = "queue-n-filter";
    for (const value of ["", "1", "2", "3"]) {
      const option = doc.createElement("option");
      option.value = value;
      option.textContent = value === "" ? "all lengths" : `${value}-grams`;
      this.nSelect.appendChild(option);
    }
    const emitFilter = () => {
      this.filter = {
        status: (this.statusSelect.value || null) as CandidateStatus | null,
        n: this.nSelect.value === "" ? null : Number(this.nSelect.value),
      };
      this.handlers.onFilter(this.filter);
    };
    this.statusSelect.addEventListener("change", emitFilter);
    this.nSelect.addEventListener("change", emitFilter);
    this.meta = doc.createElement("span");
    this.meta.className = "queue-meta";
    bar.append(this.statusSelect, this.nSelect, this.meta);

    const table = doc.createElement("table");
    table.className = "queue-table";
    const head = doc.createElement("thead");
    const headRow = doc.createElement("tr");
    for (const title of ["#", "phrase", "n", "freq", "status", "actions"]) {
      const th = doc.createElement("th");
      th.textContent = title;
      headRow.appendChild(th);
    }
    head.appendChild(headRow);
    this.tbody = doc.createElement("tbody");
    table.append(head, this.tbody);

    const pager = doc.createElement("div");
    pager.className = "queue-pager";
    this.prev = doc.createElement("button");
    this.prev.textContent = "prev";
    this.next = doc.createElement("button");
    this.next.textContent = "next";
    this.prev.addEventListener("click", () => {
      if (this.page) this.handlers.onPage(Math.max(0, this.page.offset - this.page.limit));
    });
    this.next.addEventListener("click", () => {
      if (this.page) this.handlers.onPage(this.page.offset + this.page.limit);
    });
    pager.append(this.prev, this.next);

    this.el.append(bar, table, pager);
    this.el.addEventListener("keydown", (event) => this.onKey(event as KeyboardEvent));
  }

  render(page: CandidatePage): void {
    this.page = page;
    const doc = this.el.ownerDocument;
    this.tbody.textContent = "";
    const rows = this.visibleRows();
    if (this.cursor >= rows.length) this.cursor = Math.max(0, rows.length - 1);
    rows.forEach((candidate, index) => {
      this.tbody.appendChild(this.buildRow(doc, candidate, page.offset + index + 1, index === this.cursor));
    });
    this.meta.textContent = `${page.offset + 1}-${page.offset + page.items.length} of ${page.total} (seq ${page.seq})`;
    this.prev.disabled = page.offset === 0;
    this.next.disabled = page.offset + page.limit >= page.total;
  }

  /** What the queue currently shows, for comparing against the server. */
  displayedStatuses(): Map<string, CandidateStatus> {
    const shown = new Map<string, CandidateStatus>();
    for (const row of this.tbody.querySelectorAll("tr")) {
      const phrase = row.getAttribute("data-phrase");
      const status = row.getAttribute("data-status");
      if (phrase && status) shown.set(phrase, status as CandidateStatus);
    }
    return shown;
  }

  private visibleRows(): CandidateRecord[] {
    if (!this.page) return [];
    const wantN = this.filter.n;
    return this.page.items.filter((item) => wantN === null || item.n === wantN);
  }

  private buildRow(doc: Document, candidate: CandidateRecord, rank: number, selected: boolean): HTMLTableRowElement {
    const row = doc.createElement("tr");
    row.dataset.phrase = candidate.phrase;
    row.dataset.status = candidate.status;
    if (selected) row.classList.add("selected");

    const rankCell = doc.createElement("td");
    rankCell.textContent = String(rank);

    const phraseCell = doc.createElement("td");
    const breakdown = doc.createElement("details");
    const summary = doc.createElement("summary");
    summary.textContent = candidate.phrase;
    breakdown.appendChild(summary);
    const perArticle = doc.createElement("ul");
    perArticle.className = "per-article";
    for (const [slug, count] of Object.entries(candidate.per_article)) {
      if (count === 0) continue;
      const entry = doc.createElement("li");
      entry.textContent = `${slug}: ${count}`;
      perArticle.appendChild(entry);
    }
    breakdown.appendChild(perArticle);
    phraseCell.appendChild(breakdown);

    const nCell = doc.createElement("td");
    nCell.textContent = String(candidate.n);
    const freqCell = doc.createElement("td");
    freqCell.textContent = String(candidate.total_frequency);
    const statusCell = doc.createElement("td");
    statusCell.textContent = candidate.status;
    statusCell.className = `status status-${candidate.status}`;

    const actionCell = doc.createElement("td");
    for (const action of actionsFor(candidate.status)) {
      const button = doc.createElement("button");
      button.textContent = ACTION_LABELS[action];
      button.dataset.action = action;
      button.addEventListener("click", () => this.handlers.onAction(candidate.phrase, action));
      actionCell.appendChild(button);
    }

    row.append(rankCell, phraseCell, nCell, freqCell, statusCell, actionCell);
    return row;
  }

  private onKey(event: KeyboardEvent): void {
    const rows = this.visibleRows();
    if (rows.length === 0) return;
    if (event.key === "j" || event.key === "ArrowDown") {
      this.cursor = Math.min(rows.length - 1, this.cursor + 1);
    } else if (event.key === "k" || event.key === "ArrowUp") {
      this.cursor = Math.max(0, this.cursor - 1);
    } else {
      const action = ACTION_KEYS[event.key];
      const current = rows[this.cursor];
      if (!action || !current) return;
      // offer only what the API would accept for this row
      if (!actionsFor(current.status).includes(action)) return;
      this.handlers.onAction(current.phrase, action);
      return;
    }
    event.preventDefault();
    if (this.page) this.render(this.page);
  }
}
