import type { CandidatePage, CandidateRecord, OntologyJson } from "../src/types.js";

/** A small ontology in the service's JSON shape: a three-level tree,
 * a part, synonyms on two elements, and one functional cross-link. */
export function plantOntology(): OntologyJson {
  return {
    base_iri: "http://ontoforge.example/wind#",
    version: "0.1.0",
    root: "wind_power_plant",
    concepts: [
      {
        id: "wind_power_plant",
        label: "Wind Power Plant",
        synonyms: ["Wind Farm", "WPP"],
        properties: [
          { name: "installed capacity", value_kind: "quantity", synonyms: ["nameplate capacity"] },
        ],
      },
      { id: "wind_turbine", label: "Wind Turbine", synonyms: ["WTG"], properties: [] },
      { id: "rotor", label: "Rotor", synonyms: [], properties: [] },
      { id: "anemometer", label: "Anemometer", synonyms: [], properties: [] },
      { id: "wind_speed", label: "Wind Speed", synonyms: [], properties: [] },
    ],
    relations: [
      { kind: "has", source: "wind_power_plant", target: "wind_turbine" },
      { kind: "has", source: "wind_turbine", target: "rotor" },
      { kind: "measures", source: "anemometer", target: "wind_speed" },
    ],
    validation: { errors: [], warnings: [] },
  };
}

export function candidate(overrides: Partial<CandidateRecord> = {}): CandidateRecord {
  return {
    phrase: "wind",
    n: 1,
    total_frequency: 10,
    per_article: { wind_power: 10 },
    status: "pending",
    linked_element: null,
    decided_at: null,
    ...overrides,
  };
}

export function page(items: CandidateRecord[], overrides: Partial<CandidatePage> = {}): CandidatePage {
  return { total: items.length, offset: 0, limit: 50, seq: 0, items, ...overrides };
}
