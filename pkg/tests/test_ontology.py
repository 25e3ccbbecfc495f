"""Domain model: mutation guards, taxonomy safety, queries, validation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontoforge.ontology import (
    RELATION_KINDS,
    Concept,
    ConceptInUseError,
    DuplicateLabelError,
    DuplicatePropertyError,
    DuplicateRelationError,
    IsACycleError,
    Ontology,
    PropertyDef,
    UnknownConceptError,
    UnknownEndpointError,
    concept_slug,
)


def _onto(*labels):
    onto = Ontology()
    for label in labels:
        onto.add_concept(label)
    return onto


class TestConceptSlug:
    @pytest.mark.parametrize(
        "label,slug",
        [
            ("Wind Turbine", "wind_turbine"),
            ("  U-component ", "u-component"),
            ("Rotor  Diameter", "rotor_diameter"),
            ("WPP", "wpp"),
        ],
    )
    def test_slugs(self, label, slug):
        assert concept_slug(label) == slug


class TestConceptBasics:
    def test_synonyms_never_repeat_label(self):
        concept = Concept(id="wind", label="Wind", synonyms=["wind", "Wind", "breeze"])
        assert concept.synonyms == ["breeze"]

    def test_property_value_kind_validated(self):
        with pytest.raises(ValueError):
            PropertyDef(name="speed", value_kind="vector")

    def test_property_synonyms_deduped(self):
        prop = PropertyDef(name="capacity", synonyms=["rated capacity", "rated capacity"])
        assert prop.synonyms == ["rated capacity"]


class TestMutations:
    def test_add_concept_returns_slug_id(self):
        onto = Ontology()
        assert onto.add_concept("Wind Turbine") == "wind_turbine"

    def test_duplicate_label_rejected_case_insensitive(self):
        onto = _onto("Wind")
        with pytest.raises(DuplicateLabelError):
            onto.add_concept("wind")

    def test_explicit_concept_id(self):
        onto = Ontology()
        cid = onto.add_concept("Wind", concept_id="w1")
        assert cid == "w1"
        assert onto.concepts["w1"].label == "Wind"

    def test_bad_concept_id_rejected(self):
        onto = Ontology()
        with pytest.raises(ValueError):
            onto.add_concept("Wind", concept_id="has space")

    def test_unknown_relation_kind(self):
        onto = _onto("A", "B")
        with pytest.raises(ValueError):
            onto.add_relation("resembles", "a", "b")

    def test_relation_endpoints_must_exist(self):
        onto = _onto("A")
        with pytest.raises(UnknownEndpointError):
            onto.add_relation("has", "a", "ghost")

    def test_duplicate_relation_rejected(self):
        onto = _onto("A", "B")
        onto.add_relation("has", "a", "b")
        with pytest.raises(DuplicateRelationError):
            onto.add_relation("has", "a", "b")

    def test_same_endpoints_different_kind_allowed(self):
        onto = _onto("A", "B")
        onto.add_relation("has", "a", "b")
        onto.add_relation("utilizes", "a", "b")
        assert len(onto.relations) == 2

    def test_duplicate_property_rejected(self):
        onto = _onto("A")
        onto.add_property("a", PropertyDef("name"))
        with pytest.raises(DuplicatePropertyError):
            onto.add_property("a", PropertyDef("Name"))

    def test_add_synonym_skips_label_and_dups(self):
        onto = _onto("Wind")
        onto.add_synonym("wind", "breeze")
        onto.add_synonym("wind", "breeze")
        onto.add_synonym("wind", "WIND")
        assert onto.concepts["wind"].synonyms == ["breeze"]

    def test_property_synonym_attach(self):
        onto = _onto("A")
        onto.add_property("a", PropertyDef("capacity"))
        onto.add_synonym("a", "rated capacity", property_name="capacity")
        assert onto.concepts["a"].property_named("capacity").synonyms == ["rated capacity"]

    def test_remove_concept_refused_while_related(self):
        onto = _onto("A", "B")
        onto.add_relation("has", "a", "b")
        with pytest.raises(ConceptInUseError):
            onto.remove_concept("b")
        onto.remove_relation("has", "a", "b")
        onto.remove_concept("b")
        assert "b" not in onto.concepts

    def test_remove_concept_clears_root(self):
        onto = _onto("A")
        onto.root = "a"
        onto.remove_concept("a")
        assert onto.root is None

    def test_removed_label_is_reusable(self):
        onto = _onto("A")
        onto.remove_concept("a")
        assert onto.add_concept("A") == "a"

    def test_remove_missing_relation(self):
        onto = _onto("A", "B")
        with pytest.raises(UnknownEndpointError):
            onto.remove_relation("has", "a", "b")

    def test_remove_property_and_synonym(self):
        onto = _onto("A")
        onto.add_property("a", PropertyDef("capacity", synonyms=["rated"]))
        onto.remove_synonym("a", "rated", property_name="capacity")
        assert onto.concepts["a"].property_named("capacity").synonyms == []
        onto.remove_property("a", "capacity")
        assert onto.concepts["a"].properties == []
        with pytest.raises(UnknownConceptError):
            onto.remove_property("a", "capacity")


class TestTaxonomySafety:
    def test_self_loop_rejected(self):
        onto = _onto("A")
        with pytest.raises(IsACycleError):
            onto.add_relation("is_a", "a", "a")

    def test_two_cycle_rejected(self):
        onto = _onto("A", "B")
        onto.add_relation("is_a", "a", "b")
        with pytest.raises(IsACycleError):
            onto.add_relation("is_a", "b", "a")

    def test_long_cycle_rejected(self):
        onto = _onto("A", "B", "C", "D")
        onto.add_relation("is_a", "a", "b")
        onto.add_relation("is_a", "b", "c")
        onto.add_relation("is_a", "c", "d")
        with pytest.raises(IsACycleError):
            onto.add_relation("is_a", "d", "a")

    def test_diamond_is_legal(self):
        # multiple parents are fine as long as no edge closes a cycle
        onto = _onto("A", "B", "C", "D")
        onto.add_relation("is_a", "a", "b")
        onto.add_relation("is_a", "a", "c")
        onto.add_relation("is_a", "b", "d")
        onto.add_relation("is_a", "c", "d")
        assert onto.is_a_topological_order() is not None

    def test_non_is_a_cycles_allowed(self):
        onto = _onto("A", "B")
        onto.add_relation("causes", "a", "b")
        onto.add_relation("causes", "b", "a")
        assert onto.is_a_topological_order() is not None

    def test_topological_order_respects_edges(self):
        onto = _onto("A", "B", "C")
        onto.add_relation("is_a", "a", "b")
        onto.add_relation("is_a", "b", "c")
        order = onto.is_a_topological_order()
        assert order is not None
        assert order.index("a") < order.index("b") < order.index("c")


class TestQueries:
    def _sample(self):
        onto = _onto("Wind Turbine", "Anemometer")
        onto.add_synonym("wind_turbine", "WTG")
        onto.add_property("wind_turbine", PropertyDef("hub height", synonyms=["tower height"]))
        return onto

    def test_label_match(self):
        hits = self._sample().query_by_term("wind turbine")
        assert [(h.kind, h.matched_on) for h in hits] == [("concept", "label")]

    def test_synonym_match(self):
        hits = self._sample().query_by_term("wtg")
        assert hits[0].matched_on == "synonym"
        assert hits[0].concept_id == "wind_turbine"

    def test_property_and_property_synonym_match(self):
        onto = self._sample()
        assert onto.query_by_term("hub height")[0].kind == "property"
        hit = onto.query_by_term("tower height")[0]
        assert hit.matched_on == "property-synonym"
        assert hit.property_name == "hub height"

    def test_concepts_rank_before_properties(self):
        onto = self._sample()
        onto.add_concept("Hub Height")
        kinds = [h.kind for h in onto.query_by_term("hub height")]
        assert kinds == ["concept", "property"]

    def test_no_substring_matching(self):
        assert self._sample().query_by_term("wind") == []


class TestValidation:
    def test_clean_ontology_ok(self):
        onto = _onto("A", "B")
        onto.add_relation("is_a", "a", "b")
        report = onto.validate()
        assert report.ok()
        assert report.errors == []

    def test_hand_built_cycle_reported(self):
        from ontoforge.ontology import Relation

        onto = _onto("A", "B")
        onto.relations.extend([Relation("is_a", "a", "b"), Relation("is_a", "b", "a")])
        report = onto.validate()
        assert any("cycle" in e for e in report.errors)

    def test_dangling_endpoint_reported(self):
        from ontoforge.ontology import Relation

        onto = _onto("A")
        onto.relations.append(Relation("has", "a", "ghost"))
        report = onto.validate()
        assert any("dangling" in e for e in report.errors)

    def test_synonym_label_collision_is_warning(self):
        onto = _onto("Wind Turbine", "Generator")
        onto.add_synonym("wind_turbine", "Generator")
        report = onto.validate()
        assert report.ok()
        assert any("Generator" in w and "also the label" in w for w in report.warnings)

    def test_root_reachability_warning(self):
        onto = _onto("Root", "Part", "Child", "Island")
        onto.root = "root"
        onto.add_relation("has", "root", "part")
        onto.add_relation("is_a", "child", "root")
        report = onto.validate()
        assert any("island" in w for w in report.warnings)
        assert not any("part" in w and "no is_a/has path" in w for w in report.warnings)
        assert not any("child" in w for w in report.warnings)


class TestEqualityAndCanonicalForm:
    def test_structural_equality_ignores_order(self):
        a = _onto("X", "Y")
        a.add_relation("has", "x", "y")
        a.add_synonym("x", "s1")
        a.add_synonym("x", "s2")
        b = _onto("Y", "X")
        b.add_synonym("x", "s2")
        b.add_synonym("x", "s1")
        b.add_relation("has", "x", "y")
        assert a.structurally_equal(b)

    def test_structural_equality_sees_property_kind(self):
        a = _onto("X")
        a.add_property("x", PropertyDef("speed", value_kind="quantity"))
        b = _onto("X")
        b.add_property("x", PropertyDef("speed", value_kind="text"))
        assert not a.structurally_equal(b)

    def test_canonical_text_is_sorted_and_stable(self):
        onto = _onto("B", "A")
        onto.add_relation("has", "b", "a")
        text = onto.canonical_text()
        assert text == onto.canonical_text()
        lines = text.splitlines()
        assert lines[1].startswith("concept\ta")
        assert lines[2].startswith("concept\tb")


# Randomized taxonomy-safety drill: inserting random is_a edges must leave
# the graph orderable, and edges between already-connected nodes must be
# rejected exactly when they would point back up an existing path.
_NODE_COUNT = 8


@given(
    edges=st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=_NODE_COUNT - 1),
            st.integers(min_value=0, max_value=_NODE_COUNT - 1),
        ),
        max_size=24,
    )
)
@settings(max_examples=200, deadline=None)
def test_random_edge_insertions_keep_dag(edges):
    onto = Ontology()
    ids = [onto.add_concept(f"N{i}") for i in range(_NODE_COUNT)]
    for src_i, dst_i in edges:
        src, dst = ids[src_i], ids[dst_i]
        reachable_back = src == dst or onto._is_a_reaches(dst, src)
        duplicate = any(
            r.kind == "is_a" and (r.source, r.target) == (src, dst) for r in onto.relations
        )
        try:
            onto.add_relation("is_a", src, dst)
        except IsACycleError:
            assert reachable_back
        except DuplicateRelationError:
            assert duplicate
        else:
            assert not reachable_back and not duplicate
        order = onto.is_a_topological_order()
        assert order is not None
        position = {cid: i for i, cid in enumerate(order)}
        for rel in onto.relations_of_kind("is_a"):
            assert position[rel.source] < position[rel.target]
