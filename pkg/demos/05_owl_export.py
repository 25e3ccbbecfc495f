"""
Deterministic OWL serialization
===============================

An ontology serializes to Turtle or RDF/XML as a canonically sorted set
of triples: same ontology in, same bytes out, and parsing the bytes gets
the ontology back. Foreign triples in outside files are ignored, never
fatal.
"""

from ontoforge import seed_wind_ontology
from ontoforge.owlio import Triple, from_owl, to_owl

onto = seed_wind_ontology()

doc = to_owl(onto, syntax="turtle")
lines = doc.text.splitlines()
print(f"turtle document: {len(lines)} lines, base <{doc.base_iri}>")
print("\nopening lines:")
for line in lines[:6]:
    print(f"  {line}")

# one concept as it appears on the wire
start = next(i for i, l in enumerate(lines) if l.startswith(":anemometer "))
print("\nthe anemometer block:")
for line in lines[start : start + 4]:
    print(f"  {line}")

# parse -> same structure, reserialize -> same bytes
again = from_owl(doc)
print(f"\nparsed back, structurally equal: {onto.structurally_equal(again)}")
print(f"reserialized bytes identical:   {to_owl(again, syntax='turtle').text == doc.text}")

# the XML syntax carries the same triples
xml_doc = to_owl(onto, syntax="xml")
via_xml = from_owl(xml_doc)
print(f"round trip through RDF/XML:     {onto.structurally_equal(via_xml)}")

# files written by other tools may carry triples outside the mapping
foreign = doc.text + '\n<http://example.org/note> <http://purl.org/dc/terms/creator> "someone" .\n'
ignored: list[Triple] = []
salvaged = from_owl(foreign, ignored=ignored)
print(f"\nforeign file: recovered {len(salvaged.concepts)} concepts, ignored {len(ignored)} triple(s)")
print(f"  ignored: {ignored[0].subject} {ignored[0].predicate} ...")
