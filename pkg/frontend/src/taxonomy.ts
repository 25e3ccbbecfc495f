import type { ConceptJson, OntologyJson, RelationJson } from "./types.js";

const TREE_KINDS = new Set(["is_a", "has"]);

/** Children of a node in the tree projection: is_a subclasses plus has
 * parts, sorted by label. */
export function treeChildren(onto: OntologyJson, conceptId: string): string[] {
  const children: string[] = [];
  for (const relation of onto.relations) {
    if (relation.kind === "is_a" && relation.target === conceptId) children.push(relation.source);
    if (relation.kind === "has" && relation.source === conceptId) children.push(relation.target);
  }
  const labels = labelIndex(onto);
  return [...new Set(children)].sort((a, b) => (labels.get(a) ?? a).localeCompare(labels.get(b) ?? b));
}

/** Top-level nodes: the declared root first, then every concept with no
 * tree parent. */
export function treeRoots(onto: OntologyJson): string[] {
  const hasParent = new Set<string>();
  for (const relation of onto.relations) {
    if (relation.kind === "is_a") hasParent.add(relation.source);
    if (relation.kind === "has") hasParent.add(relation.target);
  }
  const labels = labelIndex(onto);
  const roots = onto.concepts
    .map((concept) => concept.id)
    .filter((id) => !hasParent.has(id) && id !== onto.root)
    .sort((a, b) => (labels.get(a) ?? a).localeCompare(labels.get(b) ?? b));
  if (onto.root !== null && labels.has(onto.root)) roots.unshift(onto.root);
  return roots;
}

/** Functional relations touching a concept, for the cross-link list. */
export function crossLinks(onto: OntologyJson, conceptId: string): RelationJson[] {
  return onto.relations.filter(
    (relation) =>
      !TREE_KINDS.has(relation.kind) &&
      (relation.source === conceptId || relation.target === conceptId),
  );
}

function labelIndex(onto: OntologyJson): Map<string, string> {
  return new Map(onto.concepts.map((concept) => [concept.id, concept.label]));
}

export interface TaxonomyHandlers {
  onSelect(conceptId: string): void;
}

/** Collapsible tree over is_a/has edges with a detail panel for the
 * selected concept. Everything shown is recomputed from the ontology
 * JSON on each render; the view holds no ontology state of its own. */
export class TaxonomyView {
  readonly el: HTMLElement;
  private readonly tree: HTMLElement;
  private readonly detail: HTMLElement;
  private readonly handlers: TaxonomyHandlers;
  private selected: string | null = null;

  constructor(doc: Document, handlers: TaxonomyHandlers = { onSelect: () => {} }) {
    this.handlers = handlers;
    this.el = doc.createElement("section");
    this.el.className = "taxonomy";
    this.tree = doc.createElement("div");
    this.tree.className = "taxonomy-tree";
    this.detail = doc.createElement("aside");
    this.detail.className = "taxonomy-detail";
    this.el.append(this.tree, this.detail);
  }

  render(onto: OntologyJson): void {
    const doc = this.el.ownerDocument;
    this.tree.textContent = "";
    if (onto.concepts.length === 0) {
      const empty = doc.createElement("p");
      empty.className = "taxonomy-empty";
      empty.textContent = "no concepts yet";
      this.tree.appendChild(empty);
    } else {
      const list = doc.createElement("ul");
      for (const rootId of treeRoots(onto)) {
        list.appendChild(this.buildNode(doc, onto, rootId, new Set()));
      }
      this.tree.appendChild(list);
    }
    if (this.selected !== null && !onto.concepts.some((c) => c.id === this.selected)) {
      this.selected = null;
    }
    this.renderDetail(onto);
  }

  select(onto: OntologyJson, conceptId: string): void {
    this.selected = conceptId;
    this.renderDetail(onto);
  }

  selectedId(): string | null {
    return this.selected;
  }

  /** Every concept id currently in the tree, for checks against the
   * server's ontology. */
  displayedNodeIds(): Set<string> {
    const ids = new Set<string>();
    for (const node of this.tree.querySelectorAll("[data-concept]")) {
      const id = node.getAttribute("data-concept");
      if (id) ids.add(id);
    }
    return ids;
  }

  private buildNode(doc: Document, onto: OntologyJson, conceptId: string, path: Set<string>): HTMLLIElement {
    const item = doc.createElement("li");
    const concept = onto.concepts.find((c) => c.id === conceptId);
    const button = doc.createElement("button");
    button.className = "node-label";
    button.dataset.concept = conceptId;
    button.textContent = concept?.label ?? conceptId;
    button.addEventListener("click", () => {
      this.selected = conceptId;
      this.renderDetail(onto);
      this.handlers.onSelect(conceptId);
    });

    const children = treeChildren(onto, conceptId).filter((child) => !path.has(child));
    const badges = doc.createElement("span");
    badges.className = "badges";
    for (const synonym of concept?.synonyms ?? []) {
      const badge = doc.createElement("span");
      badge.className = "badge badge-synonym";
      badge.textContent = synonym;
      badges.appendChild(badge);
    }
    const links = crossLinks(onto, conceptId);
    if (links.length > 0) {
      const badge = doc.createElement("span");
      badge.className = "badge badge-links";
      badge.textContent = `${links.length} link${links.length > 1 ? "s" : ""}`;
      badges.appendChild(badge);
    }

    if (children.length === 0) {
      item.append(button, badges);
      return item;
    }
    const branch = doc.createElement("details");
    branch.open = true;
    const summary = doc.createElement("summary");
    summary.append(button, badges);
    branch.appendChild(summary);
    const list = doc.createElement("ul");
    const nextPath = new Set(path);
    nextPath.add(conceptId);
    for (const child of children) {
      list.appendChild(this.buildNode(doc, onto, child, nextPath));
    }
    branch.appendChild(list);
    item.appendChild(branch);
    return item;
  }

  private renderDetail(onto: OntologyJson): void {
    const doc = this.el.ownerDocument;
    this.detail.textContent = "";
    const report = onto.validation;
    const health = doc.createElement("p");
    health.className = "validation-line";
    health.textContent = `${report.errors.length} errors, ${report.warnings.length} warnings`;
    this.detail.appendChild(health);
    if (this.selected === null) {
      const hint = doc.createElement("p");
      hint.textContent = "select a concept";
      this.detail.appendChild(hint);
      return;
    }
    const concept = onto.concepts.find((c) => c.id === this.selected);
    if (!concept) return;
    this.detail.appendChild(this.conceptCard(doc, onto, concept));
  }

  private conceptCard(doc: Document, onto: OntologyJson, concept: ConceptJson): HTMLElement {
    const card = doc.createElement("div");
    card.className = "concept-card";
    const title = doc.createElement("h3");
    title.textContent = concept.label;
    const id = doc.createElement("code");
    id.textContent = concept.id;
    card.append(title, id);

    if (concept.synonyms.length > 0) {
      const synonyms = doc.createElement("p");
      synonyms.className = "card-synonyms";
      synonyms.textContent = `synonyms: ${concept.synonyms.join(", ")}`;
      card.appendChild(synonyms);
    }

    if (concept.properties.length > 0) {
      const list = doc.createElement("ul");
      list.className = "card-properties";
      for (const prop of concept.properties) {
        const entry = doc.createElement("li");
        const names = prop.synonyms.length > 0 ? ` (${prop.synonyms.join(", ")})` : "";
        entry.textContent = `${prop.name}: ${prop.value_kind}${names}`;
        list.appendChild(entry);
      }
      card.appendChild(list);
    }

    const links = crossLinks(onto, concept.id);
    if (links.length > 0) {
      const list = doc.createElement("ul");
      list.className = "card-links";
      for (const relation of links) {
        const entry = doc.createElement("li");
        entry.textContent = `${relation.kind}: ${relation.source} → ${relation.target}`;
        list.appendChild(entry);
      }
      card.appendChild(list);
    }
    return card;
  }
}
