import { searchElements } from "./search.js";
import type { DecisionPayload, OntologyJson, RelationKind, ValueKind } from "./types.js";

const RELATION_KINDS: RelationKind[] = ["is_a", "has", "generates", "causes", "utilizes", "measures", "controls"];
const VALUE_KINDS: ValueKind[] = ["text", "quantity", "date", "concept_reference"];

/** Builds the payload forms for the three accept actions. Each returns
 * the payload on confirm or null on cancel; required references are
 * enforced client-side so the server never sees an empty target. */
export class DialogHost {
  constructor(private readonly root: HTMLElement) {}

  get doc(): Document {
    return this.root.ownerDocument;
  }

  /** accept_concept: label, optional link to an existing concept. */
  conceptPayload(phrase: string, onto: OntologyJson): Promise<DecisionPayload | null> {
    return this.show(`accept "${phrase}" as concept`, (form, done) => {
      const label = this.textField(form, "label", phrase);
      const kindSelect = this.doc.createElement("select");
      kindSelect.className = "field-relation-kind";
      for (const kind of RELATION_KINDS) {
        const option = this.doc.createElement("option");
        option.value = kind;
        option.textContent = kind;
        kindSelect.appendChild(option);
      }
      const picker = new ElementPicker(this.doc, onto, { concepts: true, properties: false });
      const linkRow = this.doc.createElement("label");
      linkRow.textContent = "link to (optional) ";
      linkRow.append(kindSelect, picker.el);
      form.appendChild(linkRow);
      this.confirmRow(form, () => {
        const payload: DecisionPayload = {};
        if (label.value.trim() !== "" && label.value !== phrase) payload.label = label.value.trim();
        const target = picker.chosen();
        if (target !== null) {
          payload.related_to = target;
          payload.relation_kind = kindSelect.value as RelationKind;
        }
        done(payload);
      }, () => done(null));
    });
  }

  /** accept_property: owner concept (required), name, value kind. */
  propertyPayload(phrase: string, onto: OntologyJson): Promise<DecisionPayload | null> {
    return this.show(`accept "${phrase}" as property`, (form, done) => {
      if (onto.concepts.length === 0) {
        this.hint(form, "accept a concept first; a property needs an owner", () => done(null));
        return;
      }
      const name = this.textField(form, "name", phrase);
      const kindSelect = this.doc.createElement("select");
      kindSelect.className = "field-value-kind";
      for (const kind of VALUE_KINDS) {
        const option = this.doc.createElement("option");
        option.value = kind;
        option.textContent = kind;
        kindSelect.appendChild(option);
      }
      const kindRow = this.doc.createElement("label");
      kindRow.textContent = "value kind ";
      kindRow.appendChild(kindSelect);
      form.appendChild(kindRow);
      const picker = new ElementPicker(this.doc, onto, { concepts: true, properties: false });
      const ownerRow = this.doc.createElement("label");
      ownerRow.textContent = "owner ";
      ownerRow.appendChild(picker.el);
      form.appendChild(ownerRow);
      this.confirmRow(form, () => {
        const owner = picker.chosen();
        if (owner === null) return; // required; keep the dialog open
        const payload: DecisionPayload = { owner, value_kind: kindSelect.value as ValueKind };
        if (name.value.trim() !== "" && name.value !== phrase) payload.name = name.value.trim();
        done(payload);
      }, () => done(null));
    });
  }

  /** accept_synonym: target element (required), display form. */
  synonymPayload(phrase: string, onto: OntologyJson): Promise<DecisionPayload | null> {
    return this.show(`promote "${phrase}" as synonym`, (form, done) => {
      if (onto.concepts.length === 0) {
        this.hint(form, "accept a concept first; a synonym needs a target", () => done(null));
        return;
      }
      const display = this.textField(form, "display", phrase);
      const picker = new ElementPicker(this.doc, onto, { concepts: true, properties: true });
      const targetRow = this.doc.createElement("label");
      targetRow.textContent = "of ";
      targetRow.appendChild(picker.el);
      form.appendChild(targetRow);
      this.confirmRow(form, () => {
        const target = picker.chosen();
        if (target === null) return;
        const payload: DecisionPayload = { target };
        if (display.value.trim() !== "" && display.value !== phrase) payload.display = display.value.trim();
        done(payload);
      }, () => done(null));
    });
  }

  private show(
    title: string,
    build: (form: HTMLFormElement, done: (payload: DecisionPayload | null) => void) => void,
  ): Promise<DecisionPayload | null> {
    return new Promise((resolve) => {
      const overlay = this.doc.createElement("div");
      overlay.className = "dialog-overlay";
      const form = this.doc.createElement("form");
      form.className = "dialog";
      const heading = this.doc.createElement("h3");
      heading.textContent = title;
      form.appendChild(heading);
      const done = (payload: DecisionPayload | null) => {
        overlay.remove();
        resolve(payload);
      };
      build(form, done);
      overlay.appendChild(form);
      this.root.appendChild(overlay);
      const input = form.querySelector("input");
      if (input) (input as HTMLInputElement).focus();
    });
  }

  private textField(form: HTMLFormElement, name: string, value: string): HTMLInputElement {
    const row = this.doc.createElement("label");
    row.textContent = `${name} `;
    const input = this.doc.createElement("input");
    input.type = "text";
    input.value = value;
    input.className = `field-${name}`;
    row.appendChild(input);
    form.appendChild(row);
    return input;
  }

  private confirmRow(form: HTMLFormElement, onConfirm: () => void, onCancel: () => void): void {
    const row = this.doc.createElement("div");
    row.className = "dialog-buttons";
    const confirm = this.doc.createElement("button");
    confirm.type = "submit";
    confirm.textContent = "confirm";
    const cancel = this.doc.createElement("button");
    cancel.type = "button";
    cancel.textContent = "cancel";
    cancel.addEventListener("click", onCancel);
    row.append(confirm, cancel);
    form.appendChild(row);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      onConfirm();
    });
  }

  private hint(form: HTMLFormElement, message: string, onClose: () => void): void {
    const text = this.doc.createElement("p");
    text.className = "dialog-hint";
    text.textContent = message;
    form.appendChild(text);
    const close = this.doc.createElement("button");
    close.type = "button";
    close.textContent = "close";
    close.addEventListener("click", onClose);
    form.appendChild(close);
  }
}

/** Search box over the ontology's elements; typing lists matches,
 * clicking one fixes the choice. */
export class ElementPicker {
  readonly el: HTMLElement;
  private readonly input: HTMLInputElement;
  private readonly results: HTMLUListElement;
  private readonly choice: HTMLElement;
  private target: string | null = null;

  constructor(
    doc: Document,
    onto: OntologyJson,
    accept: { concepts: boolean; properties: boolean },
  ) {
    this.el = doc.createElement("div");
    this.el.className = "element-picker";
    this.input = doc.createElement("input");
    this.input.type = "search";
    this.input.placeholder = "search elements";
    this.results = doc.createElement("ul");
    this.results.className = "picker-results";
    this.choice = doc.createElement("span");
    this.choice.className = "picker-choice";
    this.el.append(this.input, this.choice, this.results);

    this.input.addEventListener("input", () => {
      this.results.textContent = "";
      const hits = searchElements(onto, this.input.value).filter(
        (hit) => (hit.kind === "concept" ? accept.concepts : accept.properties),
      );
      for (const hit of hits.slice(0, 12)) {
        const item = doc.createElement("li");
        item.textContent = `${hit.display} (${hit.kind} ${hit.target}, via ${hit.matchedOn})`;
        item.dataset.target = hit.target;
        item.addEventListener("click", () => {
          this.target = hit.target;
          this.choice.textContent = hit.target;
          this.results.textContent = "";
          this.input.value = "";
        });
        this.results.appendChild(item);
      }
    });
  }

  chosen(): string | null {
    return this.target;
  }
}
