import type { OntologyJson } from "./types.js";

export interface SearchHit {
  kind: "concept" | "property";
  conceptId: string;
  /** decision payload target: concept id, or "concept_id#property name" */
  target: string;
  /** the name that matched */
  display: string;
  matchedOn: "label" | "synonym" | "property" | "property-synonym";
}

/** Case-insensitive search over every name an element carries: labels,
 * synonyms, property names, property synonyms. Exact matches rank
 * before substring matches, concepts before properties; ties resolve
 * by concept id. Mirrors the server's term lookup so the promotion
 * dialog offers the same elements the draft would resolve. */
export function searchElements(onto: OntologyJson, query: string): SearchHit[] {
  const needle = query.trim().toLowerCase();
  if (needle === "") return [];
  const exact: SearchHit[][] = [[], []];
  const partial: SearchHit[][] = [[], []];
  const bucket = (hit: SearchHit, name: string) => {
    const lowered = name.toLowerCase();
    const rank = hit.kind === "concept" ? 0 : 1;
    if (lowered === needle) exact[rank].push(hit);
    else if (lowered.includes(needle)) partial[rank].push(hit);
  };
  const concepts = [...onto.concepts].sort((a, b) => a.id.localeCompare(b.id));
  for (const concept of concepts) {
    bucket(
      { kind: "concept", conceptId: concept.id, target: concept.id, display: concept.label, matchedOn: "label" },
      concept.label,
    );
    for (const synonym of concept.synonyms) {
      bucket(
        { kind: "concept", conceptId: concept.id, target: concept.id, display: synonym, matchedOn: "synonym" },
        synonym,
      );
    }
    for (const prop of concept.properties) {
      const target = `${concept.id}#${prop.name}`;
      bucket(
        { kind: "property", conceptId: concept.id, target, display: prop.name, matchedOn: "property" },
        prop.name,
      );
      for (const synonym of prop.synonyms) {
        bucket(
          { kind: "property", conceptId: concept.id, target, display: synonym, matchedOn: "property-synonym" },
          synonym,
        );
      }
    }
  }
  return [...exact[0], ...exact[1], ...partial[0], ...partial[1]];
}
