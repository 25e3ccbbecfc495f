// JSON shapes of the curation service API. Field names match the wire
// format exactly; see docs/api.md in the repo root.

export type CandidateStatus = "pending" | "concept" | "property" | "synonym" | "rejected";

export type DecisionAction = "accept_concept" | "accept_property" | "accept_synonym" | "reject";

export type RelationKind = "is_a" | "has" | "generates" | "causes" | "utilizes" | "measures" | "controls";

export type ValueKind = "text" | "quantity" | "date" | "concept_reference";

export interface CandidateRecord {
  phrase: string;
  n: number;
  total_frequency: number;
  per_article: Record<string, number>;
  status: CandidateStatus;
  linked_element: string | null;
  decided_at: number | null;
}

export interface CandidatePage {
  total: number;
  offset: number;
  limit: number;
  seq: number;
  items: CandidateRecord[];
}

export interface SessionInfo {
  id: string;
  seq: number;
  candidates: number;
  from_seed: boolean;
  corpus_ref: string;
}

export interface DecisionPayload {
  label?: string;
  related_to?: string;
  relation_kind?: RelationKind;
  owner?: string;
  name?: string;
  value_kind?: ValueKind;
  target?: string;
  display?: string;
}

export interface DecisionReply {
  seq: number;
  phrase: string;
  status: CandidateStatus;
  warnings: string[];
}

export interface UndoReply {
  seq: number;
  phrase: string;
  status: CandidateStatus;
}

export interface PropertyJson {
  name: string;
  value_kind: ValueKind;
  synonyms: string[];
}

export interface ConceptJson {
  id: string;
  label: string;
  synonyms: string[];
  properties: PropertyJson[];
}

export interface RelationJson {
  kind: RelationKind;
  source: string;
  target: string;
}

export interface OntologyJson {
  base_iri: string;
  version: string;
  root: string | null;
  concepts: ConceptJson[];
  relations: RelationJson[];
  validation: { errors: string[]; warnings: string[] };
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details: Record<string, unknown>;
}
