import { ApiClient, ApiRequestError } from "./api.js";
import { DialogHost } from "./dialogs.js";
import { ReviewQueue, type QueueAction } from "./queue.js";
import { TaxonomyView } from "./taxonomy.js";
import type { CandidateStatus, DecisionPayload, OntologyJson } from "./types.js";

const PAGE_SIZE = 50;

const EMPTY_ONTOLOGY: OntologyJson = {
  base_iri: "",
  version: "",
  root: null,
  concepts: [],
  relations: [],
  validation: { errors: [], warnings: [] },
};

/** Wires the queue, taxonomy, and dialogs to the API. The server is the
 * state of record: every action refetches and re-renders, and the only
 * thing that survives a reload is the session id in the URL hash. */
export class App {
  readonly queue: ReviewQueue;
  readonly taxonomy: TaxonomyView;
  readonly dialogs: DialogHost;
  sessionId: string | null = null;
  ontology: OntologyJson = EMPTY_ONTOLOGY;

  private readonly root: HTMLElement;
  private readonly api: ApiClient;
  private readonly banner: HTMLElement;
  private readonly errorLine: HTMLElement;
  private readonly sessionLine: HTMLElement;
  private readonly exportButton: HTMLButtonElement;
  private readonly openForm: HTMLFormElement;
  private readonly workspace: HTMLElement;
  private statusFilter: CandidateStatus | null = null;
  private offset = 0;
  private offline = false;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    const doc = root.ownerDocument;

    this.banner = doc.createElement("div");
    this.banner.className = "banner";
    this.banner.hidden = true;

    const header = doc.createElement("header");
    const title = doc.createElement("h1");
    title.textContent = "ontoforge review";
    this.sessionLine = doc.createElement("span");
    this.sessionLine.className = "session-line";
    this.exportButton = doc.createElement("button");
    this.exportButton.className = "export-button";
    this.exportButton.textContent = "export OWL";
    this.exportButton.addEventListener("click", () => void this.exportOwl());
    header.append(title, this.sessionLine, this.exportButton);

    this.errorLine = doc.createElement("div");
    this.errorLine.className = "error-line";
    this.errorLine.hidden = true;

    this.openForm = doc.createElement("form");
    this.openForm.className = "open-form";
    const seedLabel = doc.createElement("label");
    const seedBox = doc.createElement("input");
    seedBox.type = "checkbox";
    seedBox.className = "open-from-seed";
    seedLabel.append(seedBox, doc.createTextNode(" start from the shipped wind ontology"));
    const openButton = doc.createElement("button");
    openButton.type = "submit";
    openButton.textContent = "open session";
    this.openForm.append(seedLabel, openButton);
    this.openForm.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.openSession(seedBox.checked);
    });

    this.queue = new ReviewQueue(doc, {
      onAction: (phrase, action) => void this.handleAction(phrase, action),
      onFilter: (filter) => {
        this.statusFilter = filter.status;
        this.offset = 0;
        void this.refresh();
      },
      onPage: (offset) => {
        this.offset = offset;
        void this.refresh();
      },
    });
    this.taxonomy = new TaxonomyView(doc, { onSelect: () => {} });
    this.dialogs = new DialogHost(root);

    this.workspace = doc.createElement("main");
    this.workspace.className = "workspace";
    this.workspace.append(this.queue.el, this.taxonomy.el);
    this.workspace.hidden = true;

    root.append(this.banner, header, this.errorLine, this.openForm, this.workspace);
  }

  /** Join the session named in the URL hash, or show the open form. */
  async start(): Promise<void> {
    const hash = this.root.ownerDocument.defaultView?.location.hash ?? "";
    const match = /^#\/session\/(\w+)$/.exec(hash);
    if (match) {
      await this.joinSession(match[1]);
    }
  }

  async openSession(fromSeed: boolean): Promise<void> {
    await this.guarded(async () => {
      const info = await this.api.openSession({ from_seed: fromSeed });
      this.enterSession(info.id);
      await this.refresh();
    });
  }

  async joinSession(sessionId: string): Promise<void> {
    await this.guarded(async () => {
      await this.api.candidates(sessionId, { limit: 1 });
      this.enterSession(sessionId);
      await this.refresh();
    });
  }

  private enterSession(sessionId: string): void {
    this.sessionId = sessionId;
    this.openForm.hidden = true;
    this.workspace.hidden = false;
    const win = this.root.ownerDocument.defaultView;
    if (win) win.location.hash = `#/session/${sessionId}`;
  }

  /** Refetch candidates and ontology and re-render both views. */
  async refresh(): Promise<void> {
    if (this.sessionId === null) return;
    await this.guarded(async () => {
      const page = await this.api.candidates(this.sessionId!, {
        status: this.statusFilter ?? undefined,
        offset: this.offset,
        limit: PAGE_SIZE,
      });
      this.ontology = await this.api.ontology(this.sessionId!);
      this.queue.render(page);
      this.taxonomy.render(this.ontology);
      this.sessionLine.textContent = `session ${this.sessionId!.slice(0, 8)} · seq ${page.seq}`;
    });
  }

  async handleAction(phrase: string, action: QueueAction): Promise<void> {
    if (this.sessionId === null) return;
    let payload: DecisionPayload | null = {};
    if (action === "accept_concept") payload = await this.dialogs.conceptPayload(phrase, this.ontology);
    if (action === "accept_property") payload = await this.dialogs.propertyPayload(phrase, this.ontology);
    if (action === "accept_synonym") payload = await this.dialogs.synonymPayload(phrase, this.ontology);
    if (payload === null) return; // cancelled
    await this.guarded(async () => {
      if (action === "undo") {
        await this.api.undo(this.sessionId!, phrase);
      } else {
        await this.api.decide(this.sessionId!, phrase, action, payload!);
      }
      this.clearError();
      await this.refresh();
    });
  }

  async exportOwl(): Promise<void> {
    if (this.sessionId === null) return;
    await this.guarded(async () => {
      const text = await this.api.exportOwl(this.sessionId!);
      this.showExport(text);
    });
  }

  /** Run an API call, translating failures into the banner (network)
   * or the inline error line (API refusal). A 409 means the displayed
   * state was stale, so the views are refetched rather than trusted. */
  private async guarded(run: () => Promise<void>): Promise<void> {
    try {
      await run();
      if (this.offline) {
        this.setOffline(false);
        // recovery re-enabled everything wholesale; refetch so the views
        // recompute their own widget states against current server truth
        await this.refresh();
      }
    } catch (error) {
      if (error instanceof ApiRequestError) {
        this.showError(`${error.code}: ${error.message}`);
        if (error.status === 409) await this.refresh();
        return;
      }
      // browsers and node both say "fetch" in their network-failure TypeError
      if (error instanceof TypeError && /fetch|network/i.test(error.message)) {
        this.setOffline(true);
        return;
      }
      throw error;
    }
  }

  private showExport(text: string): void {
    const doc = this.root.ownerDocument;
    const overlay = doc.createElement("div");
    overlay.className = "dialog-overlay export-view";
    const box = doc.createElement("div");
    box.className = "dialog";
    const pre = doc.createElement("pre");
    pre.className = "owl-preview";
    pre.textContent = text;
    const close = doc.createElement("button");
    close.textContent = "close";
    close.addEventListener("click", () => overlay.remove());
    const win = doc.defaultView;
    if (win && typeof win.URL?.createObjectURL === "function") {
      const link = doc.createElement("a");
      link.textContent = "download";
      link.href = win.URL.createObjectURL(new win.Blob([text], { type: "text/turtle" }));
      link.setAttribute("download", "ontology.ttl");
      box.appendChild(link);
    }
    box.append(close, pre);
    overlay.appendChild(box);
    this.root.appendChild(overlay);
  }

  private showError(message: string): void {
    this.errorLine.textContent = message;
    this.errorLine.hidden = false;
  }

  private clearError(): void {
    this.errorLine.textContent = "";
    this.errorLine.hidden = true;
  }

  private setOffline(offline: boolean): void {
    // only act on transitions: blanket-toggling button state on every
    // successful call would clobber flags render() manages (pager ends)
    if (offline === this.offline) return;
    this.offline = offline;
    this.banner.hidden = !offline;
    this.banner.textContent = offline ? "server unreachable; actions disabled" : "";
    this.root.classList.toggle("offline", offline);
    for (const button of this.root.querySelectorAll("button")) {
      if (button.closest(".banner")) continue;
      (button as HTMLButtonElement).disabled = offline;
    }
    if (offline) this.addRetry();
  }

  private addRetry(): void {
    if (this.banner.querySelector("button")) return;
    const retry = this.root.ownerDocument.createElement("button");
    retry.textContent = "retry";
    retry.addEventListener("click", () => void this.refresh());
    this.banner.appendChild(retry);
  }
}
