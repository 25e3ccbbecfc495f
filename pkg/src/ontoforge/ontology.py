"""Ontology domain model: concepts, synonym sets, properties, relations.

Concepts are labeled classes with synonym sets (abbreviations included)
and typed attributes; relations are directed edges drawn from a closed
vocabulary of seven kinds. The is_a subgraph is kept acyclic (a DAG, so
multiple parents are legal), and every mutation preserves referential
integrity, so validate() can only report errors on structures built by
hand or read from a foreign file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

RELATION_KINDS = ("is_a", "has", "generates", "causes", "utilizes", "measures", "controls")
VALUE_KINDS = ("text", "quantity", "date", "concept_reference")


class OntologyError(Exception):
    """Base class for rejected ontology mutations."""


class DuplicateLabelError(OntologyError):
    pass


class UnknownConceptError(OntologyError):
    pass


class UnknownEndpointError(OntologyError):
    pass


class IsACycleError(OntologyError):
    pass


class DuplicateRelationError(OntologyError):
    pass


class DuplicatePropertyError(OntologyError):
    pass


class ConceptInUseError(OntologyError):
    """Deleting a concept with incident relations is refused."""


def concept_slug(label: str) -> str:
    """Stable concept id: lowercase, spaces to underscores, safe charset."""
    slug = label.strip().lower()
    slug = re.sub(r"\s+", "_", slug)
    slug = re.sub(r"[^a-z0-9_\-]", "", slug)
    return slug


@dataclass
class PropertyDef:
    """A typed attribute of one concept, with its own synonym set."""

    name: str
    synonyms: list[str] = field(default_factory=list)
    value_kind: str = "text"

    def __post_init__(self):
        if self.value_kind not in VALUE_KINDS:
            raise ValueError(f"unknown value_kind {self.value_kind!r}")
        self.synonyms = list(dict.fromkeys(self.synonyms))


@dataclass
class Concept:
    """A labeled class. The synonym set never repeats the label itself."""

    id: str
    label: str
    synonyms: list[str] = field(default_factory=list)
    properties: list[PropertyDef] = field(default_factory=list)

    def __post_init__(self):
        self.synonyms = [s for s in dict.fromkeys(self.synonyms) if s.lower() != self.label.lower()]

    def property_named(self, name: str) -> PropertyDef | None:
        low = name.lower()
        for prop in self.properties:
            if prop.name.lower() == low:
                return prop
        return None


@dataclass(frozen=True)
class Relation:
    kind: str
    source: str
    target: str


@dataclass(frozen=True)
class TermMatch:
    """One query_by_term hit: which element matched and on what."""

    kind: str  # "concept" or "property"
    concept_id: str
    matched_on: str  # label|synonym|property|property-synonym
    property_name: str | None = None


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.errors


class Ontology:
    """Mutable ontology snapshot; share across threads only behind a lock."""

    def __init__(
        self,
        base_iri: str = "http://ontoforge.example/wind#",
        version: str = "0.1.0",
        root: str | None = None,
    ):
        self.base_iri = base_iri
        self.version = version
        self.root = root
        self.concepts: dict[str, Concept] = {}
        self.relations: list[Relation] = []
        self._labels: dict[str, str] = {}  # lowercased label -> concept id

    # --- mutations ---

    def add_concept(
        self,
        label: str,
        synonyms: list[str] | tuple[str, ...] = (),
        concept_id: str | None = None,
    ) -> str:
        """Add a class. The id is derived from the label unless an explicit
        concept_id is supplied (used when reading files that chose their own
        identifiers)."""
        if not label or not label.strip():
            raise ValueError("concept label must be non-empty")
        label = label.strip()
        if label.lower() in self._labels:
            raise DuplicateLabelError(f"label {label!r} already in use")
        if concept_id is not None:
            cid = concept_id
            if not cid or any(ch.isspace() for ch in cid):
                raise ValueError(f"bad concept id {concept_id!r}")
        else:
            cid = concept_slug(label)
        if not cid:
            raise ValueError(f"label {label!r} does not yield a usable id")
        if cid in self.concepts:
            raise DuplicateLabelError(f"label {label!r} collides with existing id {cid!r}")
        self.concepts[cid] = Concept(id=cid, label=label, synonyms=list(synonyms))
        self._labels[label.lower()] = cid
        return cid

    def add_relation(self, kind: str, source: str, target: str) -> Relation:
        if kind not in RELATION_KINDS:
            raise ValueError(f"unknown relation kind {kind!r}")
        for endpoint in (source, target):
            if endpoint not in self.concepts:
                raise UnknownEndpointError(f"unknown concept {endpoint!r}")
        relation = Relation(kind, source, target)
        if relation in self.relations:
            raise DuplicateRelationError(f"duplicate {kind}({source}, {target})")
        if kind == "is_a":
            if source == target:
                raise IsACycleError(f"is_a({source}, {target}) is a self-loop")
            if self._is_a_reaches(target, source):
                raise IsACycleError(f"is_a({source}, {target}) would close a cycle")
        self.relations.append(relation)
        return relation

    def add_property(self, concept_id: str, prop: PropertyDef) -> None:
        concept = self.concepts.get(concept_id)
        if concept is None:
            raise UnknownConceptError(f"unknown concept {concept_id!r}")
        if concept.property_named(prop.name) is not None:
            raise DuplicatePropertyError(f"{concept_id!r} already has property {prop.name!r}")
        concept.properties.append(prop)

    def add_synonym(self, concept_id: str, synonym: str, property_name: str | None = None) -> None:
        concept = self.concepts.get(concept_id)
        if concept is None:
            raise UnknownConceptError(f"unknown concept {concept_id!r}")
        if property_name is None:
            if synonym.lower() != concept.label.lower() and synonym not in concept.synonyms:
                concept.synonyms.append(synonym)
            return
        prop = concept.property_named(property_name)
        if prop is None:
            raise UnknownConceptError(f"{concept_id!r} has no property {property_name!r}")
        if synonym.lower() != prop.name.lower() and synonym not in prop.synonyms:
            prop.synonyms.append(synonym)

    def remove_concept(self, concept_id: str) -> None:
        if concept_id not in self.concepts:
            raise UnknownConceptError(f"unknown concept {concept_id!r}")
        incident = [r for r in self.relations if concept_id in (r.source, r.target)]
        if incident:
            raise ConceptInUseError(
                f"{concept_id!r} has {len(incident)} incident relation(s); remove them first"
            )
        concept = self.concepts.pop(concept_id)
        self._labels.pop(concept.label.lower(), None)
        if self.root == concept_id:
            self.root = None

    def remove_relation(self, kind: str, source: str, target: str) -> None:
        relation = Relation(kind, source, target)
        try:
            self.relations.remove(relation)
        except ValueError:
            raise UnknownEndpointError(f"no relation {kind}({source}, {target})") from None

    def remove_synonym(self, concept_id: str, synonym: str, property_name: str | None = None):
        concept = self.concepts.get(concept_id)
        if concept is None:
            raise UnknownConceptError(f"unknown concept {concept_id!r}")
        if property_name is None:
            if synonym in concept.synonyms:
                concept.synonyms.remove(synonym)
            return
        prop = concept.property_named(property_name)
        if prop is not None and synonym in prop.synonyms:
            prop.synonyms.remove(synonym)

    def remove_property(self, concept_id: str, name: str) -> None:
        concept = self.concepts.get(concept_id)
        if concept is None:
            raise UnknownConceptError(f"unknown concept {concept_id!r}")
        prop = concept.property_named(name)
        if prop is None:
            raise UnknownConceptError(f"{concept_id!r} has no property {name!r}")
        concept.properties.remove(prop)

    # --- queries ---

    def concept_by_label(self, label: str) -> Concept | None:
        cid = self._labels.get(label.lower())
        return self.concepts.get(cid) if cid else None

    def relations_of_kind(self, kind: str) -> list[Relation]:
        return [r for r in self.relations if r.kind == kind]

    def incident_relations(self, concept_id: str) -> list[Relation]:
        return [r for r in self.relations if concept_id in (r.source, r.target)]

    def query_by_term(self, term: str) -> list[TermMatch]:
        """Case-insensitive exact match over labels, synonyms, property
        names and property synonyms; concepts rank before properties."""
        needle = term.strip().lower()
        concept_hits: list[TermMatch] = []
        property_hits: list[TermMatch] = []
        for cid in sorted(self.concepts):
            concept = self.concepts[cid]
            if concept.label.lower() == needle:
                concept_hits.append(TermMatch("concept", cid, "label"))
            elif any(s.lower() == needle for s in concept.synonyms):
                concept_hits.append(TermMatch("concept", cid, "synonym"))
            for prop in sorted(concept.properties, key=lambda p: p.name.lower()):
                if prop.name.lower() == needle:
                    property_hits.append(TermMatch("property", cid, "property", prop.name))
                elif any(s.lower() == needle for s in prop.synonyms):
                    property_hits.append(
                        TermMatch("property", cid, "property-synonym", prop.name)
                    )
        return concept_hits + property_hits

    def _is_a_reaches(self, start: str, goal: str) -> bool:
        """True when goal is reachable from start along is_a edges."""
        stack = [start]
        seen = set()
        while stack:
            node = stack.pop()
            if node == goal:
                return True
            if node in seen:
                continue
            seen.add(node)
            stack.extend(r.target for r in self.relations if r.kind == "is_a" and r.source == node)
        return False

    def is_a_topological_order(self) -> list[str] | None:
        """Topological order of the is_a subgraph, None if it has a cycle."""
        edges = self.relations_of_kind("is_a")
        out: dict[str, list[str]] = {}
        indeg: dict[str, int] = {cid: 0 for cid in self.concepts}
        for rel in edges:
            out.setdefault(rel.source, []).append(rel.target)
            indeg[rel.target] = indeg.get(rel.target, 0) + 1
        ready = sorted(cid for cid, d in indeg.items() if d == 0)
        order = []
        while ready:
            node = ready.pop()
            order.append(node)
            for nxt in out.get(node, ()):
                indeg[nxt] -= 1
                if indeg[nxt] == 0:
                    ready.append(nxt)
        return order if len(order) == len(indeg) else None

    # --- validation ---

    def validate(self) -> ValidationReport:
        """Structural check: errors are integrity violations, warnings are
        curiosities a curator may want to look at."""
        report = ValidationReport()
        labels_seen: dict[str, str] = {}
        for cid, concept in self.concepts.items():
            low = concept.label.lower()
            if low in labels_seen:
                report.errors.append(
                    f"duplicate label {concept.label!r} on {labels_seen[low]} and {cid}"
                )
            labels_seen[low] = cid
            for syn in concept.synonyms:
                if not syn.strip():
                    report.warnings.append(f"concept {cid} has an empty synonym string")
            names_seen = set()
            for prop in concept.properties:
                if prop.name.lower() in names_seen:
                    report.errors.append(f"duplicate property {prop.name!r} on {cid}")
                names_seen.add(prop.name.lower())
                for syn in prop.synonyms:
                    if not syn.strip():
                        report.warnings.append(
                            f"property {cid}.{prop.name} has an empty synonym string"
                        )

        seen_triples = set()
        for rel in self.relations:
            triple = (rel.kind, rel.source, rel.target)
            if triple in seen_triples:
                report.errors.append(f"duplicate relation {rel.kind}({rel.source}, {rel.target})")
            seen_triples.add(triple)
            for endpoint in (rel.source, rel.target):
                if endpoint not in self.concepts:
                    report.errors.append(
                        f"dangling endpoint {endpoint!r} in {rel.kind}({rel.source}, {rel.target})"
                    )
        if self.is_a_topological_order() is None:
            report.errors.append("is_a subgraph contains a cycle")

        # Synonym / label collisions ("Generator" both a class and a synonym).
        for cid, concept in self.concepts.items():
            for syn in concept.synonyms:
                other = self._labels.get(syn.lower())
                if other and other != cid:
                    report.warnings.append(
                        f"synonym {syn!r} of {cid} is also the label of concept {other}"
                    )

        if self.root and self.root in self.concepts:
            unreachable = sorted(set(self.concepts) - self._reaching_root(self.root))
            for cid in unreachable:
                report.warnings.append(f"concept {cid} has no is_a/has path to root {self.root}")
        return report

    def _reaching_root(self, root: str) -> set[str]:
        """Concepts with an is_a/has path up to the root: children climb
        is_a edges, parts climb to their wholes."""
        up: dict[str, set[str]] = {}
        for rel in self.relations:
            if rel.kind == "is_a":
                up.setdefault(rel.source, set()).add(rel.target)
            elif rel.kind == "has":
                up.setdefault(rel.target, set()).add(rel.source)
        reaches = {root}
        changed = True
        while changed:
            changed = False
            for cid in self.concepts:
                if cid in reaches:
                    continue
                if up.get(cid) and up[cid] & reaches:
                    reaches.add(cid)
                    changed = True
        return reaches

    # --- equality and canonical form ---

    def structurally_equal(self, other: "Ontology") -> bool:
        """Order-insensitive equality over concepts, properties, relations."""
        if (self.base_iri, self.version, self.root) != (
            other.base_iri,
            other.version,
            other.root,
        ):
            return False
        if set(self.concepts) != set(other.concepts):
            return False
        for cid, concept in self.concepts.items():
            oth = other.concepts[cid]
            if concept.label != oth.label or set(concept.synonyms) != set(oth.synonyms):
                return False
            mine = {
                p.name: (p.value_kind, frozenset(p.synonyms)) for p in concept.properties
            }
            theirs = {p.name: (p.value_kind, frozenset(p.synonyms)) for p in oth.properties}
            if mine != theirs:
                return False
        return set(self.relations) == set(other.relations)

    def canonical_text(self) -> str:
        """Line-delimited canonical form: concepts, properties, relations,
        each section sorted; used by golden-file tests."""
        lines = [f"ontology\t{self.base_iri}\t{self.version}\troot={self.root or '-'}"]
        for cid in sorted(self.concepts):
            concept = self.concepts[cid]
            syns = "|".join(sorted(concept.synonyms))
            lines.append(f"concept\t{cid}\t{concept.label}\t{syns}")
        for cid in sorted(self.concepts):
            for prop in sorted(self.concepts[cid].properties, key=lambda p: p.name):
                syns = "|".join(sorted(prop.synonyms))
                lines.append(f"property\t{cid}\t{prop.name}\t{prop.value_kind}\t{syns}")
        for rel in sorted(self.relations, key=lambda r: (r.kind, r.source, r.target)):
            lines.append(f"relation\t{rel.kind}\t{rel.source}\t{rel.target}")
        return "\n".join(lines) + "\n"
