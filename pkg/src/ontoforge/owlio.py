"""OWL serialization and parsing for Ontology objects.

Two syntaxes are supported: a terse triple syntax (the default, one
triple per line, diff-friendly) and an XML syntax for tools that expect
it. Serialization is deterministic: the triple list is sorted by
(subject IRI, predicate IRI, object key) where IRI objects order before
literal objects; two runs over the same ontology yield identical bytes.

Mapping, in both directions:
  concept            -> owl:Class with rdfs:label
  synonym            -> synonymSet annotation (a literal per entry)
  is_a relation      -> rdfs:subClassOf between the two classes
  other relations    -> a triple using one of the declared object
                        properties (has/generates/causes/utilizes/
                        measures/controls), asserted class to class
  typed attribute    -> owl:DatatypeProperty named <owner>__<slug> with
                        rdfs:domain and an xsd range (string/decimal/
                        date); concept_reference attributes become
                        owl:ObjectProperty declarations with a domain
  root concept       -> rootConcept annotation on the ontology node

Triples a reader does not understand are collected into a caller-
supplied list instead of failing the parse.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path

from .ontology import (
    RELATION_KINDS,
    DuplicateLabelError,
    IsACycleError,
    Ontology,
    OntologyError,
    PropertyDef,
    concept_slug,
)

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

_WELL_KNOWN = {"owl": OWL_NS, "rdf": RDF_NS, "rdfs": RDFS_NS, "xsd": XSD_NS}

_RANGE_BY_KIND = {"text": XSD_NS + "string", "quantity": XSD_NS + "decimal", "date": XSD_NS + "date"}
_KIND_BY_RANGE = {
    XSD_NS + "string": "text",
    XSD_NS + "decimal": "quantity",
    XSD_NS + "integer": "quantity",
    XSD_NS + "int": "quantity",
    XSD_NS + "long": "quantity",
    XSD_NS + "float": "quantity",
    XSD_NS + "double": "quantity",
    XSD_NS + "date": "date",
    XSD_NS + "dateTime": "date",
}


class OwlSyntaxError(Exception):
    """Unparseable document text."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f" (line {line}" + (f", col {col})" if col is not None else ")") if line else ""
        super().__init__(message + where)
        self.line = line
        self.col = col


class InvalidOntologyError(Exception):
    """Parseable document that does not describe a usable ontology."""


@dataclass(frozen=True)
class Iri:
    value: str

    def __str__(self):
        return f"<{self.value}>"


@dataclass(frozen=True)
class Literal:
    lexical: str
    datatype: str | None = None

    def __str__(self):
        tail = f"^^<{self.datatype}>" if self.datatype else ""
        return f'"{self.lexical}"{tail}'


@dataclass(frozen=True)
class Triple:
    subject: str
    predicate: str
    object: Iri | Literal

    def __str__(self):
        return f"<{self.subject}> <{self.predicate}> {self.object} ."


def _object_key(obj: Iri | Literal) -> tuple:
    if isinstance(obj, Iri):
        return (0, obj.value, "")
    return (1, obj.lexical, obj.datatype or "")


def sort_triples(triples) -> list[Triple]:
    """The canonical order: subject IRI, then predicate IRI, then object
    (IRIs before literals, each compared as plain strings)."""
    return sorted(set(triples), key=lambda t: (t.subject, t.predicate, _object_key(t.object)))


@dataclass(frozen=True)
class OwlDocument:
    text: str
    base_iri: str
    syntax: str = "turtle"  # "turtle" or "xml"


# --- ontology -> triples ---


def _ontology_node(base_iri: str) -> str:
    return base_iri.rstrip("#/")


def ontology_to_triples(onto: Ontology) -> list[Triple]:
    base = onto.base_iri
    node = _ontology_node(base)
    triples: list[Triple] = [
        Triple(node, RDF_NS + "type", Iri(OWL_NS + "Ontology")),
        Triple(node, OWL_NS + "versionInfo", Literal(onto.version)),
    ]
    for kind in RELATION_KINDS:
        triples.append(Triple(base + kind, RDF_NS + "type", Iri(OWL_NS + "ObjectProperty")))
    triples.append(Triple(base + "synonymSet", RDF_NS + "type", Iri(OWL_NS + "AnnotationProperty")))
    if onto.root:
        triples.append(
            Triple(base + "rootConcept", RDF_NS + "type", Iri(OWL_NS + "AnnotationProperty"))
        )
        triples.append(Triple(node, base + "rootConcept", Iri(base + onto.root)))

    for cid, concept in onto.concepts.items():
        subject = base + cid
        triples.append(Triple(subject, RDF_NS + "type", Iri(OWL_NS + "Class")))
        triples.append(Triple(subject, RDFS_NS + "label", Literal(concept.label)))
        for syn in concept.synonyms:
            triples.append(Triple(subject, base + "synonymSet", Literal(syn)))
        slugs_seen: dict[str, str] = {}
        for prop in concept.properties:
            slug = concept_slug(prop.name)
            if not slug:
                raise InvalidOntologyError(f"property name {prop.name!r} yields no identifier")
            if slug in slugs_seen:
                raise InvalidOntologyError(
                    f"properties {slugs_seen[slug]!r} and {prop.name!r} of {cid} "
                    f"collide on identifier {slug!r}"
                )
            slugs_seen[slug] = prop.name
            piri = f"{base}{cid}__{slug}"
            if prop.value_kind == "concept_reference":
                triples.append(Triple(piri, RDF_NS + "type", Iri(OWL_NS + "ObjectProperty")))
            else:
                triples.append(Triple(piri, RDF_NS + "type", Iri(OWL_NS + "DatatypeProperty")))
                triples.append(Triple(piri, RDFS_NS + "range", Iri(_RANGE_BY_KIND[prop.value_kind])))
            triples.append(Triple(piri, RDFS_NS + "label", Literal(prop.name)))
            triples.append(Triple(piri, RDFS_NS + "domain", Iri(subject)))
            for syn in prop.synonyms:
                triples.append(Triple(piri, base + "synonymSet", Literal(syn)))

    for rel in onto.relations:
        if rel.kind == "is_a":
            predicate = RDFS_NS + "subClassOf"
        else:
            predicate = base + rel.kind
        triples.append(Triple(base + rel.source, predicate, Iri(base + rel.target)))
    return sort_triples(triples)


# --- terse triple syntax ---

_PN_LOCAL_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_\-.]*$")


def _turtle_escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def _turtle_term(iri: str, base: str) -> str:
    for prefix, ns in (("", base),) + tuple(sorted(_WELL_KNOWN.items())):
        if iri.startswith(ns):
            local = iri[len(ns):]
            if local and _PN_LOCAL_RE.match(local) and not local.endswith("."):
                return f"{prefix}:{local}"
    return f"<{iri}>"


def _turtle_object(obj: Iri | Literal, base: str) -> str:
    if isinstance(obj, Iri):
        return _turtle_term(obj.value, base)
    rendered = f'"{_turtle_escape(obj.lexical)}"'
    if obj.datatype:
        rendered += f"^^{_turtle_term(obj.datatype, base)}"
    return rendered


def emit_turtle(triples: list[Triple], base_iri: str) -> str:
    lines = [f"@prefix : <{base_iri}> ."]
    for prefix in sorted(_WELL_KNOWN):
        lines.append(f"@prefix {prefix}: <{_WELL_KNOWN[prefix]}> .")
    lines.append("")
    for triple in sort_triples(triples):
        subject = _turtle_term(triple.subject, base_iri)
        if triple.predicate == RDF_NS + "type":
            predicate = "a"
        else:
            predicate = _turtle_term(triple.predicate, base_iri)
        lines.append(f"{subject} {predicate} {_turtle_object(triple.object, base_iri)} .")
    return "\n".join(lines) + "\n"


class _TurtleReader:
    """Tokenizer/parser for the triple subset this package emits, plus
    the common constructs found in hand-written files: prefixed names,
    full IRIs, string literals with escapes, datatype and language tags,
    `a`, `;` and `,` continuation, comments. Blank nodes and collections
    are rejected with a clear error."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.prefixes: dict[str, str] = {}
        self.base = ""
        self.triples: list[Triple] = []

    def error(self, message: str):
        raise OwlSyntaxError(message, self.line, self.col)

    def _advance(self, count: int):
        chunk = self.text[self.pos : self.pos + count]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.col = len(chunk) - chunk.rfind("\n")
        else:
            self.col += count
        self.pos += count

    def _skip_ws(self):
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance(1)
            elif ch == "#":
                end = self.text.find("\n", self.pos)
                self._advance((end if end != -1 else len(self.text)) - self.pos)
            else:
                return

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _take_iriref(self) -> str:
        end = self.text.find(">", self.pos + 1)
        if end == -1:
            self.error("unterminated IRI")
        raw = self.text[self.pos + 1 : end]
        self._advance(end + 1 - self.pos)
        return _unescape_unicode(raw)

    def _take_string(self) -> str:
        text = self.text
        if text.startswith('"""', self.pos):
            end = text.find('"""', self.pos + 3)
            while end != -1 and text[end - 1] == "\\" and text[end - 2] != "\\":
                end = text.find('"""', end + 1)
            if end == -1:
                self.error("unterminated long string")
            raw = text[self.pos + 3 : end]
            self._advance(end + 3 - self.pos)
            return _unescape_string(raw, self.error)
        out = []
        i = self.pos + 1
        while i < len(text):
            ch = text[i]
            if ch == "\\":
                if i + 1 >= len(text):
                    self.error("dangling escape in string")
                out.append(text[i : i + 2])
                i += 2
                continue
            if ch == '"':
                raw = "".join(out)
                self._advance(i + 1 - self.pos)
                return _unescape_string(raw, self.error)
            if ch == "\n":
                self.error("newline inside plain string")
            out.append(ch)
            i += 1
        self.error("unterminated string")

    _PNAME_RE = re.compile(r"([A-Za-z][\w\-]*)?:([\w\-](?:[\w\-.]*[\w\-])?)?")
    _BARE_RE = re.compile(r"[A-Za-z@][\w@\-]*")
    _NUMBER_RE = re.compile(r"[+-]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")

    def _take_pname(self) -> str | None:
        match = self._PNAME_RE.match(self.text, self.pos)
        if not match:
            return None
        prefix = match.group(1) or ""
        if prefix not in self.prefixes:
            self.error(f"undeclared prefix {prefix!r}")
        self._advance(match.end() - self.pos)
        return self.prefixes[prefix] + (match.group(2) or "")

    def _take_term(self, *, as_object: bool):
        self._skip_ws()
        ch = self._peek()
        if not ch:
            self.error("unexpected end of document")
        if ch == "<":
            return Iri(self._take_iriref()) if as_object else self._take_iriref()
        if ch in "[(":
            self.error("blank nodes and collections are not supported")
        if ch == '"':
            if not as_object:
                self.error("literal cannot be a subject or predicate")
            lexical = self._take_string()
            datatype = None
            if self.text.startswith("^^", self.pos):
                self._advance(2)
                self._skip_ws()
                if self._peek() == "<":
                    datatype = self._take_iriref()
                else:
                    datatype = self._take_pname()
                    if datatype is None:
                        self.error("expected datatype after ^^")
            elif self._peek() == "@":
                lang = self._BARE_RE.match(self.text, self.pos)
                self._advance(lang.end() - self.pos)
            return Literal(lexical, datatype)
        if as_object and (ch.isdigit() or ch in "+-"):
            match = self._NUMBER_RE.match(self.text, self.pos)
            if match:
                lexical = match.group(0)
                self._advance(len(lexical))
                datatype = XSD_NS + ("decimal" if "." in lexical or "e" in lexical.lower() else "integer")
                return Literal(lexical, datatype)
        if as_object and self.text.startswith(("true", "false"), self.pos):
            word = "true" if self.text.startswith("true", self.pos) else "false"
            self._advance(len(word))
            return Literal(word, XSD_NS + "boolean")
        iri = self._take_pname()
        if iri is None:
            self.error(f"unexpected character {ch!r}")
        return Iri(iri) if as_object else iri

    def _expect(self, token: str):
        self._skip_ws()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}")
        self._advance(len(token))

    def _take_directive_name(self) -> str | None:
        for name in ("@prefix", "@base"):
            if self.text.startswith(name, self.pos):
                self._advance(len(name))
                return name
        for name in ("PREFIX", "BASE", "prefix", "base"):
            if self.text.startswith(name, self.pos) and not self._PNAME_RE.match(
                self.text, self.pos
            ):
                self._advance(len(name))
                return name
        return None

    def parse(self) -> tuple[list[Triple], dict[str, str]]:
        while True:
            self._skip_ws()
            if self.pos >= len(self.text):
                return self.triples, self.prefixes
            directive = self._take_directive_name()
            if directive in ("@prefix", "PREFIX", "prefix"):
                self._skip_ws()
                match = re.match(r"([A-Za-z][\w\-]*)?:", self.text[self.pos :])
                if not match:
                    self.error("expected prefix name")
                self._advance(match.end())
                self._skip_ws()
                if self._peek() != "<":
                    self.error("expected IRI in prefix directive")
                self.prefixes[match.group(1) or ""] = self._take_iriref()
                if directive == "@prefix":
                    self._expect(".")
                continue
            if directive in ("@base", "BASE", "base"):
                self._skip_ws()
                if self._peek() != "<":
                    self.error("expected IRI in base directive")
                self.base = self._take_iriref()
                if directive == "@base":
                    self._expect(".")
                continue
            self._parse_triples()

    def _parse_triples(self):
        subject = self._take_term(as_object=False)
        while True:
            self._skip_ws()
            if self._peek() == "a" and not self._PNAME_RE.match(self.text, self.pos):
                predicate = RDF_NS + "type"
                self._advance(1)
            else:
                predicate = self._take_term(as_object=False)
            while True:
                obj = self._take_term(as_object=True)
                self.triples.append(Triple(subject, predicate, obj))
                self._skip_ws()
                if self._peek() == ",":
                    self._advance(1)
                    continue
                break
            self._skip_ws()
            if self._peek() == ";":
                self._advance(1)
                self._skip_ws()
                if self._peek() in ".;":  # tolerate trailing semicolons
                    continue
                if self._peek() == "":
                    self.error("unexpected end of document")
                continue
            self._expect(".")
            return


def _unescape_unicode(raw: str) -> str:
    def sub(match):
        return chr(int(match.group(1) or match.group(2), 16))

    return re.sub(r"\\u([0-9A-Fa-f]{4})|\\U([0-9A-Fa-f]{8})", sub, raw)


_STRING_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape_string(raw: str, error) -> str:
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(raw):
            error("dangling escape in string")
        nxt = raw[i + 1]
        if nxt in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[nxt])
            i += 2
        elif nxt == "u" and i + 6 <= len(raw):
            out.append(chr(int(raw[i + 2 : i + 6], 16)))
            i += 6
        elif nxt == "U" and i + 10 <= len(raw):
            out.append(chr(int(raw[i + 2 : i + 10], 16)))
            i += 10
        else:
            error(f"unknown escape \\{nxt}")
    return "".join(out)


def parse_turtle(text: str) -> tuple[list[Triple], dict[str, str]]:
    return _TurtleReader(text).parse()


# --- XML syntax ---


def _xml_escape(text: str, attr: bool = False) -> str:
    text = text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    if attr:
        text = text.replace('"', "&quot;")
    return text


def _xml_pred(predicate: str, base: str) -> str:
    for prefix, ns in (("o", base), ("rdf", RDF_NS), ("rdfs", RDFS_NS), ("owl", OWL_NS)):
        if predicate.startswith(ns):
            local = predicate[len(ns):]
            if re.match(r"^[A-Za-z_][\w\-.]*$", local):
                return f"{prefix}:{local}"
    raise InvalidOntologyError(f"predicate {predicate!r} has no XML-safe name")


def emit_rdfxml(triples: list[Triple], base_iri: str) -> str:
    by_subject: dict[str, list[Triple]] = {}
    for triple in sort_triples(triples):
        by_subject.setdefault(triple.subject, []).append(triple)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<rdf:RDF",
        f'    xmlns:rdf="{RDF_NS}"',
        f'    xmlns:rdfs="{RDFS_NS}"',
        f'    xmlns:owl="{OWL_NS}"',
        f'    xmlns:o="{_xml_escape(base_iri, attr=True)}">',
    ]
    for subject in sorted(by_subject):
        lines.append(f'  <rdf:Description rdf:about="{_xml_escape(subject, attr=True)}">')
        for triple in by_subject[subject]:
            name = _xml_pred(triple.predicate, base_iri)
            obj = triple.object
            if isinstance(obj, Iri):
                lines.append(f'    <{name} rdf:resource="{_xml_escape(obj.value, attr=True)}"/>')
            elif obj.datatype:
                lines.append(
                    f'    <{name} rdf:datatype="{_xml_escape(obj.datatype, attr=True)}">'
                    f"{_xml_escape(obj.lexical)}</{name}>"
                )
            else:
                lines.append(f"    <{name}>{_xml_escape(obj.lexical)}</{name}>")
        lines.append("  </rdf:Description>")
    lines.append("</rdf:RDF>")
    return "\n".join(lines) + "\n"


def parse_rdfxml(text: str) -> list[Triple]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, col = exc.position
        raise OwlSyntaxError(f"bad XML: {exc.msg.split(':')[0] if hasattr(exc, 'msg') else exc}", line, col) from None
    if root.tag != f"{{{RDF_NS}}}RDF":
        raise OwlSyntaxError("root element is not rdf:RDF")
    triples: list[Triple] = []
    about_key = f"{{{RDF_NS}}}about"
    resource_key = f"{{{RDF_NS}}}resource"
    datatype_key = f"{{{RDF_NS}}}datatype"
    for node in root:
        subject = node.get(about_key)
        if subject is None:
            raise OwlSyntaxError("node element without rdf:about")
        if node.tag != f"{{{RDF_NS}}}Description":
            triples.append(Triple(subject, RDF_NS + "type", Iri(_expand_tag(node.tag))))
        for child in node:
            predicate = _expand_tag(child.tag)
            resource = child.get(resource_key)
            if resource is not None:
                triples.append(Triple(subject, predicate, Iri(resource)))
            else:
                triples.append(
                    Triple(subject, predicate, Literal(child.text or "", child.get(datatype_key)))
                )
    return triples


def _expand_tag(tag: str) -> str:
    if tag.startswith("{"):
        ns, _, local = tag[1:].partition("}")
        return ns + local
    return tag


# --- public entry points ---


def to_owl(ontology: Ontology, syntax: str = "turtle") -> OwlDocument:
    """Serialize; same ontology in, same bytes out."""
    triples = ontology_to_triples(ontology)
    if syntax == "turtle":
        text = emit_turtle(triples, ontology.base_iri)
    elif syntax == "xml":
        text = emit_rdfxml(triples, ontology.base_iri)
    else:
        raise ValueError(f"unknown syntax {syntax!r}")
    return OwlDocument(text=text, base_iri=ontology.base_iri, syntax=syntax)


def detect_syntax(text: str) -> str:
    head = text.lstrip()[:200]
    return "xml" if head.startswith("<?xml") or head.startswith("<rdf:RDF") else "turtle"


def from_owl(document: OwlDocument | str, ignored: list[Triple] | None = None) -> Ontology:
    """Parse a document back into an Ontology. Triples that do not fit the
    mapping are appended to `ignored` when a list is given; they never
    abort the parse. Raises OwlSyntaxError for unparseable text and
    InvalidOntologyError for well-formed text that breaks ontology rules
    (duplicate labels, subclass cycles, no ontology header)."""
    if isinstance(document, OwlDocument):
        text = document.text
        syntax = document.syntax
    else:
        text = document
        syntax = detect_syntax(text)
    prefixes: dict[str, str] = {}
    if syntax == "xml":
        triples = parse_rdfxml(text)
    else:
        triples, prefixes = parse_turtle(text)
    return triples_to_ontology(triples, empty_prefix=prefixes.get(""), ignored=ignored)


def triples_to_ontology(
    triples: list[Triple],
    empty_prefix: str | None = None,
    ignored: list[Triple] | None = None,
) -> Ontology:
    triples = sort_triples(triples)
    types: dict[str, set[str]] = {}
    for t in triples:
        if t.predicate == RDF_NS + "type" and isinstance(t.object, Iri):
            types.setdefault(t.subject, set()).add(t.object.value)

    ontology_nodes = sorted(s for s, ts in types.items() if OWL_NS + "Ontology" in ts)
    if not ontology_nodes:
        raise InvalidOntologyError("document has no ontology header")
    if len(ontology_nodes) > 1:
        raise InvalidOntologyError(f"document has {len(ontology_nodes)} ontology headers")
    node = ontology_nodes[0]

    classes = sorted(s for s, ts in types.items() if OWL_NS + "Class" in ts)
    base = empty_prefix or _infer_base(node, classes)

    def local(iri: str) -> str:
        if iri.startswith(base):
            return iri[len(base):]
        cut = max(iri.rfind("#"), iri.rfind("/"))
        return iri[cut + 1 :] if cut >= 0 else iri

    labels: dict[str, str] = {}
    synonyms: dict[str, list[str]] = {}
    domains: dict[str, str] = {}
    ranges: dict[str, str] = {}
    version = None
    root_iri = None
    consumed: set[Triple] = set()

    kind_iris = {base + kind: kind for kind in RELATION_KINDS}
    annotation_iris = {base + "synonymSet", base + "rootConcept"}

    for t in triples:
        if t.predicate == RDFS_NS + "label" and isinstance(t.object, Literal):
            labels.setdefault(t.subject, t.object.lexical)
        elif t.predicate == base + "synonymSet" and isinstance(t.object, Literal):
            synonyms.setdefault(t.subject, []).append(t.object.lexical)
        elif t.predicate == RDFS_NS + "domain" and isinstance(t.object, Iri):
            domains.setdefault(t.subject, t.object.value)
        elif t.predicate == RDFS_NS + "range" and isinstance(t.object, Iri):
            ranges.setdefault(t.subject, t.object.value)
        elif t.subject == node and t.predicate == OWL_NS + "versionInfo" and isinstance(
            t.object, Literal
        ):
            version = version if version is not None else t.object.lexical
            consumed.add(t)
        elif t.subject == node and t.predicate == base + "rootConcept" and isinstance(
            t.object, Iri
        ):
            root_iri = root_iri or t.object.value

    onto = Ontology(base_iri=base, version=version if version is not None else "0.1.0")

    class_ids: dict[str, str] = {}
    try:
        for iri in classes:
            cid = local(iri)
            label = labels.get(iri, cid)
            class_ids[iri] = onto.add_concept(
                label, sorted(synonyms.get(iri, ())), concept_id=cid
            )
    except (DuplicateLabelError, ValueError) as exc:
        raise InvalidOntologyError(str(exc)) from exc

    object_props = sorted(s for s, ts in types.items() if OWL_NS + "ObjectProperty" in ts)
    datatype_props = sorted(s for s, ts in types.items() if OWL_NS + "DatatypeProperty" in ts)
    prop_owner: dict[str, tuple[str, str]] = {}  # property iri -> (concept id, name)
    for iri in datatype_props + object_props:
        if iri in kind_iris:
            continue  # relation vocabulary, not an attribute
        domain = domains.get(iri)
        if domain is None or domain not in class_ids:
            continue  # leave its triples to the ignored report
        owner = class_ids[domain]
        name = labels.get(iri)
        if name is None:
            name = local(iri)
            owner_prefix = owner + "__"
            if name.startswith(owner_prefix):
                name = name[len(owner_prefix):]
            name = name.replace("_", " ")
        if iri in datatype_props:
            value_kind = _KIND_BY_RANGE.get(ranges.get(iri, ""), "text")
        else:
            value_kind = "concept_reference"
        try:
            onto.add_property(
                owner,
                PropertyDef(name=name, value_kind=value_kind, synonyms=sorted(synonyms.get(iri, ()))),
            )
        except OntologyError as exc:
            raise InvalidOntologyError(str(exc)) from exc
        prop_owner[iri] = (owner, name)

    try:
        for t in triples:
            if t.predicate == RDFS_NS + "subClassOf":
                kind = "is_a"
            elif t.predicate in kind_iris:
                kind = kind_iris[t.predicate]
            else:
                continue
            if (
                isinstance(t.object, Iri)
                and t.subject in class_ids
                and t.object.value in class_ids
            ):
                onto.add_relation(kind, class_ids[t.subject], class_ids[t.object.value])
                consumed.add(t)
    except IsACycleError as exc:
        raise InvalidOntologyError(str(exc)) from exc
    except OntologyError as exc:
        raise InvalidOntologyError(str(exc)) from exc

    if root_iri is not None and root_iri in class_ids:
        onto.root = class_ids[root_iri]

    if ignored is not None:
        known_types = {
            OWL_NS + "Ontology",
            OWL_NS + "Class",
            OWL_NS + "ObjectProperty",
            OWL_NS + "DatatypeProperty",
            OWL_NS + "AnnotationProperty",
        }
        for t in triples:
            if t in consumed:
                continue
            subject_known = (
                t.subject == node
                or t.subject in class_ids
                or t.subject in prop_owner
                or t.subject in kind_iris
                or t.subject in annotation_iris
            )
            if (
                t.predicate == RDF_NS + "type"
                and isinstance(t.object, Iri)
                and t.object.value in known_types
                and subject_known
            ):
                continue
            if t.subject in class_ids and t.predicate in (
                RDFS_NS + "label",
                base + "synonymSet",
            ):
                continue
            if t.subject in prop_owner and t.predicate in (
                RDFS_NS + "label",
                base + "synonymSet",
                RDFS_NS + "domain",
                RDFS_NS + "range",
            ):
                continue
            if (
                t.subject == node
                and t.predicate == base + "rootConcept"
                and isinstance(t.object, Iri)
                and onto.root is not None
                and t.object.value in class_ids
                and class_ids[t.object.value] == onto.root
            ):
                continue
            ignored.append(t)
    return onto


def _infer_base(node: str, classes: list[str]) -> str:
    for iri in classes:
        if iri.startswith(node + "#"):
            return node + "#"
        if iri.startswith(node + "/"):
            return node + "/"
    return node + "#"


def save_owl(document: OwlDocument, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(document.text, encoding="utf-8")
    return path


def load_owl(path: str | Path, ignored: list[Triple] | None = None) -> Ontology:
    text = Path(path).read_text(encoding="utf-8")
    return from_owl(text, ignored=ignored)
