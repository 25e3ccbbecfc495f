"""
The shipped wind energy ontology
================================

The package ships a hand-curated starter ontology for the wind energy
domain. Sessions can begin from it instead of an empty draft, and it
doubles as a worked example of every modelling feature.
"""

from collections import Counter

from ontoforge import seed_wind_ontology

onto = seed_wind_ontology()

properties = sum(len(c.properties) for c in onto.concepts.values())
synonyms = sum(len(c.synonyms) for c in onto.concepts.values())
print(f"concepts: {len(onto.concepts)}")
print(f"relations: {Counter(r.kind for r in onto.relations)}")
print(f"properties: {properties}, concept synonyms: {synonyms}")
print(f"root: {onto.root}")

# walk one taxonomy branch: everything that is_a sensor, transitively
print("\nsensor family:")


def walk(cid: str, depth: int) -> None:
    print(f"  {'  ' * depth}{cid}")
    children = sorted(r.source for r in onto.relations_of_kind("is_a") if r.target == cid)
    for child in children:
        walk(child, depth + 1)


walk("sensor", 0)

# lookup is by any name an element carries, not just its label
for term in ("WTG", "nameplate capacity", "wind farm", "wind park"):
    matches = onto.query_by_term(term)
    hits = ", ".join(
        f"{m.kind} {m.concept_id}"
        + (f"#{m.property_name}" if m.property_name else "")
        + f" (via {m.matched_on})"
        for m in matches
    )
    print(f"\nquery {term!r}: {hits or 'no match'}")

# the seed passes validation; warnings flag things worth a second look
report = onto.validate()
print(f"\nvalidation: {len(report.errors)} errors, {len(report.warnings)} warnings")
for line in report.warnings[:3]:
    print(f"  warning: {line}")
